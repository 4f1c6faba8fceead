//! Linear combinations of diagrams, composition with closed-component
//! evaluation and handle linearization, and the 0/1 monoid mode.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::diagram::{compose_raw, normalize_mob, star, tensor, Block, Decoration, Diagram};
use crate::error::{MoebiusError, Result};
use crate::params::{MonoidParams, ParamSet, SeriesKind};
use crate::rational::{parse_q, q_to_string, Q};

/// Finite rational combination of canonical diagrams sharing a boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb {
    n: usize,
    m: usize,
    terms: BTreeMap<Diagram, Q>,
}

impl LinComb {
    pub fn zero(n: usize, m: usize) -> LinComb {
        LinComb { n, m, terms: BTreeMap::new() }
    }

    /// The diagram itself after Möbius normalization and handle reduction.
    pub fn from_diagram(d: &Diagram, ps: &ParamSet) -> LinComb {
        let mut out = LinComb::zero(d.n(), d.m());
        expand_handles(&normalize_mob(d), Q::one(), ps, &mut out);
        out
    }

    /// Lifts a monoid product; the formal zero becomes the empty combination.
    pub fn from_monoid(n: usize, m: usize, d: Option<Diagram>) -> LinComb {
        let mut out = LinComb::zero(n, m);
        if let Some(d) = d {
            out.add_term(d, Q::one());
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> Q {
        self.terms.get(d).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c·d`, dropping the entry if it cancels.
    pub fn add_term(&mut self, d: Diagram, c: Q) {
        debug_assert_eq!((d.n(), d.m()), (self.n, self.m));
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LinComb) -> Result<LinComb> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(MoebiusError::Boundary("cannot add combinations with different boundaries".into()));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> LinComb {
        let mut out = LinComb::zero(self.n, self.m);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    /// Reflection of every term.
    pub fn star(&self) -> LinComb {
        let mut out = LinComb::zero(self.m, self.n);
        for (d, c) in &self.terms {
            out.add_term(star(d), c.clone());
        }
        out
    }

    pub fn tensor(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero(self.n + other.n, self.m + other.m);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out.add_term(tensor(d1, d2), c1 * c2);
            }
        }
        out
    }

    /// `(literal, rational)` pairs in canonical order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        self.terms.iter().map(|(d, c)| (d.to_string(), q_to_string(c))).collect()
    }

    pub fn from_pairs(n: usize, m: usize, pairs: &[(String, String)]) -> Result<LinComb> {
        let mut out = LinComb::zero(n, m);
        for (lit, c) in pairs {
            let d = crate::diagram::parse_diagram(lit)?;
            if (d.n(), d.m()) != (n, m) {
                return Err(MoebiusError::Boundary(format!("{lit} is not in Hom({n}, {m})")));
            }
            out.add_term(d, parse_q(c)?);
        }
        Ok(out)
    }
}

impl Serialize for LinComb {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for pair in self.to_pairs() {
            seq.serialize_element(&pair)?;
        }
        seq.end()
    }
}

/// Value of a boundary-free component.
pub fn evaluate_closed(dec: Decoration, ps: &ParamSet) -> Q {
    let d = dec.normalized();
    ps.series_coeff(SeriesKind::from_mob(d.mob), d.h)
}

/// Rewrites every open block with `h >= K` through the handle relation and accumulates into `out`.
fn expand_handles(d: &Diagram, coeff: Q, ps: &ParamSet, out: &mut LinComb) {
    let k = ps.k();
    let high: Vec<usize> = (0..d.blocks().len()).filter(|&i| d.blocks()[i].dec.h >= k).collect();
    if high.is_empty() {
        out.add_term(d.clone(), coeff);
        return;
    }
    let reductions: Vec<Vec<Q>> = high.iter().map(|&i| ps.handle_reduction(d.blocks()[i].dec.h)).collect();
    let mut blocks: Vec<Block> = d.blocks().to_vec();
    fn rec(
        depth: usize,
        high: &[usize],
        reductions: &[Vec<Q>],
        blocks: &mut Vec<Block>,
        coeff: Q,
        d: &Diagram,
        out: &mut LinComb,
    ) {
        if depth == high.len() {
            out.add_term(Diagram::from_blocks_unchecked(d.n(), d.m(), blocks.clone()), coeff);
            return;
        }
        for (h, c) in reductions[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            blocks[high[depth]].dec.h = h;
            rec(depth + 1, high, reductions, blocks, &coeff * c, d, out);
        }
    }
    rec(0, &high, &reductions, &mut blocks, coeff, d, out);
}

/// `x ∘ y` for single diagrams.
pub fn compose_diagrams(x: &Diagram, y: &Diagram, ps: &ParamSet) -> Result<LinComb> {
    let raw = compose_raw(x, y)?;
    let mut out = LinComb::zero(y.n(), x.m());
    let mut c = Q::one();
    for dec in &raw.closed {
        c *= evaluate_closed(*dec, ps);
        if c.is_zero() {
            return Ok(out);
        }
    }
    expand_handles(&normalize_mob(&raw.diagram), c, ps, &mut out);
    Ok(out)
}

/// `f ∘ g`, bilinear in both arguments.
pub fn compose(f: &LinComb, g: &LinComb, ps: &ParamSet) -> Result<LinComb> {
    if f.n != g.m {
        return Err(MoebiusError::Boundary(format!("cannot compose {}->{} after {}->{}", f.n, f.m, g.n, g.m)));
    }
    let mut out = LinComb::zero(g.n, f.m);
    for (x, cx) in &f.terms {
        for (y, cy) in &g.terms {
            let part = compose_diagrams(x, y, ps)?;
            let c = cx * cy;
            for (d, cd) in part.terms {
                out.add_term(d, cd * &c);
            }
        }
    }
    Ok(out)
}

pub fn equal(x: &LinComb, y: &LinComb) -> bool {
    x == y
}

/// 0/1 values of the evaluation series at `h < K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalTable {
    pub alpha: Vec<u8>,
    pub beta: Vec<u8>,
    pub gamma: Vec<u8>,
}

impl EvalTable {
    pub fn new(alpha: Vec<u8>, beta: Vec<u8>, gamma: Vec<u8>) -> Result<EvalTable> {
        let k = alpha.len();
        if k == 0 || beta.len() != k || gamma.len() != k {
            return Err(MoebiusError::InvalidParams("evaluation rows must share a positive length".into()));
        }
        if alpha.iter().chain(&beta).chain(&gamma).any(|&v| v > 1) {
            return Err(MoebiusError::InvalidParams("monoid evaluations must be 0 or 1".into()));
        }
        Ok(EvalTable { alpha, beta, gamma })
    }

    pub fn ones(k: usize) -> EvalTable {
        EvalTable { alpha: vec![1; k], beta: vec![1; k], gamma: vec![1; k] }
    }

    pub fn zeros(k: usize) -> EvalTable {
        EvalTable { alpha: vec![0; k], beta: vec![0; k], gamma: vec![0; k] }
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    /// Reads the table off a parameter set whose series values are all 0 or 1.
    pub fn from_params(ps: &ParamSet) -> Result<EvalTable> {
        let row = |kind| -> Result<Vec<u8>> {
            (0..ps.k())
                .map(|h| {
                    let v = ps.series_coeff(kind, h);
                    if v.is_zero() {
                        Ok(0)
                    } else if v.is_one() {
                        Ok(1)
                    } else {
                        Err(MoebiusError::InvalidParams(format!("series value {v} is not 0 or 1")))
                    }
                })
                .collect()
        };
        EvalTable::new(row(SeriesKind::Alpha)?, row(SeriesKind::Beta)?, row(SeriesKind::Gamma)?)
    }

    fn value(&self, dec: Decoration, mp: MonoidParams) -> u8 {
        let d = dec.normalized();
        let h = mp.reduce(d.h);
        match d.mob {
            0 => self.alpha[h],
            1 => self.beta[h],
            _ => self.gamma[h],
        }
    }
}

/// `x ∘ y` in the monoid with a formal zero, returned as `None`.
pub fn monoid_compose(x: &Diagram, y: &Diagram, mp: MonoidParams, evals: &EvalTable) -> Result<Option<Diagram>> {
    if evals.k() != mp.k() {
        return Err(MoebiusError::InvalidParams(format!(
            "evaluation table has length {} but K = {}",
            evals.k(),
            mp.k()
        )));
    }
    let raw = compose_raw(x, y)?;
    if raw.closed.iter().any(|&dec| evals.value(dec, mp) == 0) {
        return Ok(None);
    }
    Ok(Some(raw.diagram.reduce_monoid(mp)))
}

/// Serializable view used by reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinCombJson {
    pub n: usize,
    pub m: usize,
    pub terms: Vec<(String, String)>,
}

impl From<&LinComb> for LinCombJson {
    fn from(x: &LinComb) -> Self {
        LinCombJson { n: x.n, m: x.m, terms: x.to_pairs() }
    }
}
