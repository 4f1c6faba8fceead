use std::collections::BTreeMap;
use std::fs;

use moebius_core::algebra::{compose_diagrams, monoid_compose, EvalTable, LinComb};
use moebius_core::cells::{apex_set, jcell_elements, scan_idempotents, DecoratedMonoid, ZeroPattern};
use moebius_core::diagram::normalize_mob;
use moebius_core::gram::{
    exact_rank, gram_det_closed_form_rook0, gram_matrix_from_halves, gram_rank_report, GramOptions, GRAM_GUARD,
};
use moebius_core::msmall::{
    distinct_wreath_types, generalized_conjugacy_classes, m_cell_structure, m_elements, type_fibers_match, CayleyMonoid,
};
use moebius_core::params::ParamFile;
use moebius_core::rational::{parse_q, q_to_string};
use moebius_core::repcount::{count_simples, deligne_parameters, dim_left_cell, SimpleCountQuery};
use moebius_core::{
    factorize, is_member, parse_diagram, star, tensor, Diagram, Family, MoebiusError, MonoidParams, ParamSet, Result, Q,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Command, EvalsArg, GlobalOpts};
use crate::cache::{CacheStatus, HalfCache};
use crate::output::{to_value, Report};

/// Largest number of half diagrams `dims --check` will enumerate for one cell.
pub const DIMS_CHECK_GUARD: u64 = 2_000_000;

pub struct Context {
    pub global: GlobalOpts,
    pub cache: HalfCache,
}

impl Context {
    pub fn new(global: GlobalOpts) -> Context {
        let dir = global.cache_dir.clone().unwrap_or_else(HalfCache::default_dir);
        Context { global, cache: HalfCache::new(dir) }
    }

    /// Parameter file if given, otherwise constant numerators over `1 - T` (default 1, 1, 1).
    pub fn params(&self) -> Result<ParamSet> {
        if let Some(path) = &self.global.params {
            let text = fs::read_to_string(path)
                .map_err(|e| MoebiusError::Parse(format!("cannot read {}: {e}", path.display())))?;
            let file: ParamFile =
                serde_json::from_str(&text).map_err(|e| MoebiusError::Parse(format!("{}: {e}", path.display())))?;
            return file.into_params();
        }
        let (a, b, g) = self.constants("1")?;
        ParamSet::constant(a, b, g)
    }

    /// `(alpha0, beta0, gamma0)`, with unset values taken from `fallback`.
    fn constants(&self, fallback: &str) -> Result<(Q, Q, Q)> {
        let read = |v: &Option<String>| parse_q(v.as_deref().unwrap_or(fallback));
        let any = self.global.alpha0.is_some() || self.global.beta0.is_some() || self.global.gamma0.is_some();
        let fallback_for_rest = if any { "0" } else { fallback };
        let rest = |v: &Option<String>| parse_q(v.as_deref().unwrap_or(fallback_for_rest));
        Ok((read(&self.global.alpha0)?, rest(&self.global.beta0)?, rest(&self.global.gamma0)?))
    }

    fn required_constants(&self) -> Result<(Q, Q, Q)> {
        let get = |v: &Option<String>, name: &str| {
            v.as_deref().ok_or_else(|| MoebiusError::Precondition(format!("--{name} is required"))).and_then(parse_q)
        };
        Ok((
            get(&self.global.alpha0, "alpha0")?,
            get(&self.global.beta0, "beta0")?,
            get(&self.global.gamma0, "gamma0")?,
        ))
    }
}

fn lincomb_value(lc: &LinComb) -> Value {
    json!({ "n": lc.n(), "m": lc.m(), "terms": to_value(lc) })
}

fn params_value(ps: &ParamSet) -> Value {
    to_value(&ps.to_file())
}

fn status_value(s: CacheStatus) -> Value {
    to_value(&s)
}

fn monoid_from(ctx: &Context, k: Option<usize>, r: Option<usize>) -> Result<MonoidParams> {
    match (k, r) {
        (None, None) => MonoidParams::from_params(&ctx.params()?),
        (k, r) => MonoidParams::new(k.unwrap_or(1), r.unwrap_or(1)),
    }
}

pub fn run(ctx: &Context, cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Compose { d1, d2 } => {
            let ps = ctx.params()?;
            let lc = compose_diagrams(&parse_diagram(d1)?, &parse_diagram(d2)?, &ps)?;
            Ok(Report::json(json!({ "params": params_value(&ps), "lincomb": lincomb_value(&lc) })))
        }
        Command::Normalize { d } => {
            let ps = ctx.params()?;
            let x = parse_diagram(d)?;
            let lc = LinComb::from_diagram(&x, &ps);
            Ok(Report::json(json!({
                "params": params_value(&ps),
                "mob_normalized": normalize_mob(&x).to_string(),
                "lincomb": lincomb_value(&lc),
            })))
        }
        Command::Tensor { d1, d2 } => {
            Ok(Report::json(json!({ "diagram": tensor(&parse_diagram(d1)?, &parse_diagram(d2)?).to_string() })))
        }
        Command::Star { d } => Ok(Report::json(json!({ "diagram": star(&parse_diagram(d)?).to_string() }))),
        Command::Factorize { d, k, r } => {
            let x = parse_diagram(d)?;
            let mp = monoid_from(ctx, *k, *r)?;
            let fz = factorize(&x, mp);
            let recomposed = fz.recompose();
            Ok(Report::json(json!({
                "K": mp.k(),
                "r": mp.r(),
                "lambda": fz.lambda_ts,
                "bottom": fz.bottom.to_string(),
                "middle": {
                    "strands": fz.middle.strands().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "perm": fz.middle.perm(),
                },
                "top": fz.top.to_string(),
                "recomposed": recomposed.to_string(),
                "round_trip": recomposed == x.reduce_monoid(mp),
            })))
        }
        Command::Member { d, family } => {
            let x = parse_diagram(d)?;
            Ok(Report::json(match family {
                Some(f) => json!({ "family": f, "member": is_member(&x, *f) }),
                None => json!({ "families": Family::ALL.iter().filter(|&&f| is_member(&x, f)).collect::<Vec<_>>() }),
            }))
        }
        Command::Dims { family, n, k, check } => dims(ctx, *family, *n, *k, *check),
        Command::Cells { family, n, k, r, evals } => cells(ctx, *family, *n, *k, *r, *evals),
        Command::Apex { family, n, zero_pattern } => {
            let patterns: Vec<ZeroPattern> = match zero_pattern {
                Some(z) => vec![(*z).into()],
                None => vec![ZeroPattern::AllZero, ZeroPattern::SomeNonzero],
            };
            let sets: Vec<Value> = patterns.iter().map(|&z| to_value(&apex_set(*family, *n, z))).collect();
            Ok(Report::json(json!({ "apex_sets": sets })))
        }
        Command::Idempotents { family, n, zero_pattern } => idempotents(ctx, *family, *n, zero_pattern.map(Into::into)),
        Command::MonoidM { k, r } => {
            let report = m_cell_structure(MonoidParams::new(*k, *r)?)?;
            Ok(Report::json(to_value(&report)))
        }
        Command::Conjugacy { k, r, symmetric } => conjugacy(*k, *r, *symmetric),
        Command::WreathTypes { k, r, lambda } => wreath_types(*k, *r, *lambda),
        Command::CountSimples { family, n, lambda, field, r } => {
            let q = SimpleCountQuery { family: *family, n: *n, lambda_ts: *lambda, field: *field, r: *r };
            let c = count_simples(&q)?;
            Ok(Report::json(json!({
                "s": c.s,
                "count": c.value.to_string(),
                "kind": if c.exact { "exact" } else { "upper-bound" },
            })))
        }
        Command::Gram { family, n, lambda, undecorated, ordering, summary } => {
            gram(ctx, *family, *n, *lambda, *undecorated, (*ordering).into(), *summary)
        }
        Command::Rank { matrix } => {
            let text = fs::read_to_string(matrix)
                .map_err(|e| MoebiusError::Parse(format!("cannot read {}: {e}", matrix.display())))?;
            let rows = parse_csv_matrix(&text)?;
            Ok(Report::json(
                json!({ "rows": rows.len(), "cols": rows.first().map_or(0, Vec::len), "report": to_value(&exact_rank(&rows)) }),
            ))
        }
        Command::GramDet { n, check } => gram_det(ctx, *n, *check),
        Command::Deligne { lam, sqrt_lam } => {
            let (a, b, g) = ctx.required_constants()?;
            let (d, dp, dm) = deligne_parameters(&a, &b, &g, &parse_q(lam)?, &parse_q(sqrt_lam)?)?;
            Ok(Report::json(json!({
                "delta": q_to_string(&d),
                "delta_plus": q_to_string(&dp),
                "delta_minus": q_to_string(&dm),
            })))
        }
        Command::Selftest => selftest(ctx),
    }
}

pub fn parse_csv_matrix(text: &str) -> Result<Vec<Vec<Q>>> {
    let rows: Vec<Vec<Q>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(parse_q).collect::<Result<Vec<Q>>>())
        .collect::<Result<_>>()?;
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(MoebiusError::Parse("rows have different lengths".into()));
        }
    }
    Ok(rows)
}

fn dims(ctx: &Context, f: Family, n: usize, k: usize, check: bool) -> Result<Report> {
    let mut rows = Vec::new();
    let mut csv = String::from("lambda,count\n");
    let mut statuses = BTreeMap::new();
    let lambdas: Vec<usize> = (0..=n).rev().filter(|&l| f.admits_lambda(n, l)).collect();
    let mut counts = Vec::new();
    for &lambda in &lambdas {
        let count = dim_left_cell(f, n, lambda, k, false)?;
        if check && count > BigUint::from(DIMS_CHECK_GUARD) {
            return Err(MoebiusError::Guard(format!("enumerating {count} half diagrams exceeds {DIMS_CHECK_GUARD}")));
        }
        counts.push(count);
    }
    for (&lambda, count) in lambdas.iter().zip(counts) {
        let mut row = json!({ "lambda": lambda, "count": count.to_string() });
        if check {
            let (halves, status) = ctx.cache.halves(f, n, lambda, k)?;
            statuses.insert(lambda.to_string(), status_value(status));
            if BigUint::from(halves.len()) != count {
                return Err(MoebiusError::Invariant(format!(
                    "{f} n={n} lambda={lambda} K={k}: closed form {count} but enumeration finds {}",
                    halves.len()
                )));
            }
            row["enumerated"] = json!(halves.len());
        }
        csv.push_str(&format!("{lambda},{count}\n"));
        rows.push(row);
    }
    let report = Report::json(json!({ "family": f, "n": n, "K": k, "rows": rows })).with_csv(csv);
    Ok(if check { report.with_meta("cache", to_value(&statuses)) } else { report })
}

fn cells(ctx: &Context, f: Family, n: usize, k: usize, r: usize, evals: EvalsArg) -> Result<Report> {
    let mp = MonoidParams::new(k, r)?;
    let table = match evals {
        EvalsArg::Ones => EvalTable::ones(k),
        EvalsArg::Zeros => EvalTable::zeros(k),
        EvalsArg::Params => EvalTable::from_params(&ctx.params()?)?,
    };
    let mono = DecoratedMonoid::build(f, n, mp, &table)?;
    let brute = mono.greens()?;
    let combinatorial = mono.combinatorial_cells()?;
    let counts =
        |c: &moebius_core::GreensCells| json!({ "l": c.l.len(), "r": c.r.len(), "j": c.j.len(), "h": c.h.len() });
    let jcells: Vec<Value> = brute
        .j
        .iter()
        .map(|class| {
            let lambdas: std::collections::BTreeSet<usize> =
                class.iter().filter_map(|&i| mono.coords.get(i).map(|c| c.0)).collect();
            json!({ "size": class.len(), "lambdas": lambdas })
        })
        .collect();
    Ok(Report::json(json!({
        "size": mono.size(),
        "has_zero": mono.zero.is_some(),
        "bruteforce": counts(&brute),
        "combinatorial": counts(&combinatorial),
        "agree": brute == combinatorial,
        "j_cells": jcells,
    })))
}

fn idempotents(ctx: &Context, f: Family, n: usize, pattern: Option<ZeroPattern>) -> Result<Report> {
    let patterns = match pattern {
        Some(z) => vec![z],
        None => vec![ZeroPattern::AllZero, ZeroPattern::SomeNonzero],
    };
    let mut out = Vec::new();
    for z in patterns {
        let found = match z {
            ZeroPattern::AllZero => {
                let mp = MonoidParams::new(1, 1)?;
                let zeros = EvalTable::zeros(1);
                scan_idempotents(f, n, mp, |x: &Diagram, y: &Diagram| {
                    Ok(LinComb::from_monoid(y.n(), x.m(), monoid_compose(x, y, mp, &zeros)?))
                })?
            }
            ZeroPattern::SomeNonzero => {
                let ps = ctx.params()?;
                let mp = MonoidParams::from_params(&ps)?;
                scan_idempotents(f, n, mp, |x: &Diagram, y: &Diagram| compose_diagrams(x, y, &ps))?
            }
        };
        let with: Vec<usize> = found.iter().filter(|(_, v)| v.is_some()).map(|(&l, _)| l).collect();
        let expected: Vec<usize> = apex_set(f, n, z).apexes.into_iter().collect();
        let cells: Vec<Value> = found
            .iter()
            .map(|(l, v)| match v {
                Some((e, s)) => json!({ "lambda": l, "idempotent": e.to_string(), "scalar": q_to_string(s) }),
                None => json!({ "lambda": l, "idempotent": null }),
            })
            .collect();
        out.push(json!({
            "zero_pattern": z,
            "cells": cells,
            "with_idempotent": with,
            "apex_set": expected,
            "agree": with == expected,
        }));
    }
    Ok(Report::json(json!({ "family": f, "n": n, "patterns": out })))
}

fn conjugacy(k: Option<usize>, r: Option<usize>, symmetric: Option<usize>) -> Result<Report> {
    if let Some(s) = symmetric {
        let mono = CayleyMonoid::symmetric_group(s);
        let classes = generalized_conjugacy_classes(&mono)?;
        return Ok(Report::json(
            json!({ "monoid": format!("S{s}"), "size": mono.size(), "class_count": classes.len(), "classes": classes }),
        ));
    }
    let k = k.ok_or_else(|| MoebiusError::Precondition("give --K and --r, or --symmetric".into()))?;
    let mp = MonoidParams::new(k, r.unwrap_or(1))?;
    let els = m_elements(mp);
    let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(mp))?;
    let named: Vec<Vec<String>> = classes.iter().map(|c| c.iter().map(|&i| els[i].to_string()).collect()).collect();
    Ok(Report::json(json!({
        "monoid": format!("M({}, {})", mp.k(), mp.r()),
        "size": els.len(),
        "class_count": classes.len(),
        "predicted": 1 + 3 * mp.r(),
        "classes": named,
    })))
}

fn wreath_types(k: usize, r: usize, lambda: usize) -> Result<Report> {
    let mp = MonoidParams::new(k, r)?;
    let class_count = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(mp))?.len();
    let distinct = distinct_wreath_types(mp, lambda)?.len();
    let formula = moebius_core::msmall::count_types(lambda, class_count);
    let fibers = match type_fibers_match(mp, lambda) {
        Ok(b) => json!(b),
        Err(MoebiusError::Guard(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(Report::json(json!({
        "class_count": class_count,
        "distinct_types": distinct,
        "formula": formula.to_string(),
        "agree": BigUint::from(distinct) == formula,
        "fibers_match_conjugacy": fibers,
    })))
}

fn gram(
    ctx: &Context,
    f: Family,
    n: usize,
    lambda: usize,
    undecorated: bool,
    ordering: moebius_core::GramOrdering,
    summary: bool,
) -> Result<Report> {
    let ps = ctx.params()?;
    let mp = MonoidParams::from_params(&ps)?;
    let expected = dim_left_cell(f, n, lambda, mp.k(), false)?;
    if expected > BigUint::from(GRAM_GUARD) && !undecorated {
        return Err(MoebiusError::Guard(format!("Gram matrix of dimension {expected} exceeds {GRAM_GUARD}")));
    }
    let (halves, status) = ctx.cache.halves(f, n, lambda, mp.k())?;
    let opts = GramOptions { undecorated_only: undecorated, ordering };
    let gm = gram_matrix_from_halves(f, n, lambda, &ps, halves, opts)?;
    let rank = gram_rank_report(&gm, &ps);
    let mut result = json!({
        "params": params_value(&ps),
        "rows": gm.rows(),
        "cols": gm.cols(),
        "rank": rank.rank,
        "report": to_value(&rank),
    });
    if !summary {
        result["matrix"] = to_value(&gm.to_json());
    }
    Ok(Report::json(result).with_csv(gm.to_csv()).with_meta("cache", status_value(status)))
}

fn gram_det(ctx: &Context, n: usize, check: bool) -> Result<Report> {
    let (a, b, g) = ctx.required_constants()?;
    let closed = gram_det_closed_form_rook0(n, &a, &b, &g);
    let mut result = json!({ "n": n, "closed_form": q_to_string(&closed) });
    if check {
        let ps = ParamSet::constant(a, b, g)?;
        let (halves, _) = ctx.cache.halves(Family::Rook, n, 0, 1)?;
        let gm = gram_matrix_from_halves(Family::Rook, n, 0, &ps, halves, GramOptions::default())?;
        let det = exact_rank(&gm.entries).det.expect("Gram matrices are square");
        if det != closed {
            return Err(MoebiusError::Invariant(format!(
                "det(G_0) for n = {n} is {} but the closed form gives {}",
                q_to_string(&det),
                q_to_string(&closed)
            )));
        }
        result["bruteforce"] = json!(q_to_string(&det));
    }
    Ok(Report::json(result))
}

fn selftest(ctx: &Context) -> Result<Report> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let q = |s: &str| parse_q(s).expect("literal rational");

    let ps = ParamSet::constant(q("2"), q("0"), q("1"))?;
    let (halves, _) = ctx.cache.halves(Family::Rook, 1, 0, 1)?;
    let gm = gram_matrix_from_halves(Family::Rook, 1, 0, &ps, halves, GramOptions::default())?;
    let expected: Vec<Vec<Q>> = [[2, 0, 1], [0, 1, 0], [1, 0, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
        .collect();
    let rank = exact_rank(&gm.entries);
    checks.push(("rook G_0 at n = 1".into(), gm.entries == expected && rank.det == Some(q("1")) && rank.rank == 3));

    let tl = dim_left_cell(Family::TemperleyLieb, 3, 1, 2, true)?;
    checks.push(("TL left cells n = 3, lambda = 1, K = 2".into(), tl == BigUint::from(12u32)));

    let m = m_cell_structure(MonoidParams::new(4, 3)?)?;
    checks.push(("M(4, 3) cell structure".into(), m.matches_prediction));

    let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(MonoidParams::new(2, 1)?))?;
    checks.push(("M(2, 1) has 4 classes".into(), classes.len() == 4));

    let (d, dp, dm) = deligne_parameters(&q("19"), &q("4"), &q("10"), &q("1"), &q("1"))?;
    checks.push(("Deligne parameters".into(), (d, dp, dm) == (q("9"), q("7"), q("3"))));

    // random associativity sample
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.global.seed);
    let ps = ParamSet::constant(q("3"), q("-1"), q("2"))?;
    let pool = moebius_core::cells::enumerate_members(Family::Motzkin, 2, 2);
    let mut assoc = true;
    for _ in 0..50 {
        let pick = |rng: &mut ChaCha8Rng| {
            let d = &pool[rng.random_range(0..pool.len())];
            d.map_decorations(|_| moebius_core::Decoration::new(rng.random_range(0..3), rng.random_range(0..4)))
        };
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let lc = |d: &Diagram| LinComb::from_diagram(d, &ps);
        let left = moebius_core::compose(&moebius_core::compose(&lc(&x), &lc(&y), &ps)?, &lc(&z), &ps)?;
        let right = moebius_core::compose(&lc(&x), &moebius_core::compose(&lc(&y), &lc(&z), &ps)?, &ps)?;
        assoc &= left == right;
    }
    checks.push(("Motzkin associativity sample".into(), assoc));

    let jcell = jcell_elements(Family::TemperleyLieb, 2, 0, MonoidParams::new(1, 1)?)?;
    checks.push(("TL n = 2 lambda = 0 cell size".into(), jcell.len() == 9));

    let failed: Vec<&String> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect();
    if !failed.is_empty() {
        return Err(MoebiusError::Invariant(format!("self-check failed: {failed:?}")));
    }
    let list: Vec<Value> = checks.iter().map(|(name, ok)| json!({ "name": name, "passed": ok })).collect();
    Ok(Report::json(json!({ "checks": list, "seed": ctx.global.seed })))
}
