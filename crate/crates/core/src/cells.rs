//! Half diagrams, cell coordinates, Green's relations on explicit tables,
//! strict idempotents and apex sets.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::algebra::{monoid_compose, EvalTable, LinComb};
use crate::diagram::{factorize, is_member, star, Block, Decoration, Diagram, Family, NodeId};
use crate::error::{MoebiusError, Result};
use crate::msmall::{classes_from_labels, wreath_elements, CayleyMonoid, WreathElem};
use crate::params::MonoidParams;
use crate::rational::Q;

/// Largest table accepted by [`greens_cells_bruteforce`].
pub const GREENS_GUARD: usize = 5000;

/// A bottom `n -> lambda` whose through blocks each hold one undecorated top node.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfDiagram {
    pub base: Diagram,
    pub lambda_ts: usize,
}

impl HalfDiagram {
    pub fn n(&self) -> usize {
        self.base.n()
    }
}

/// Set partitions of `{1..n}` as block lists, in restricted-growth order.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every undecorated diagram of `Hom(n, m)` in the family.
pub fn enumerate_members(f: Family, n: usize, m: usize) -> Vec<Diagram> {
    let node = |i: usize| if i <= n { NodeId::bottom(i) } else { NodeId::top(i - n) };
    set_partitions(n + m)
        .into_iter()
        .map(|part| {
            let blocks =
                part.iter().map(|b| Block::new(b.iter().map(|&i| node(i)).collect(), Decoration::NONE)).collect();
            Diagram::from_blocks_unchecked(n, m, blocks)
        })
        .filter(|d| is_member(d, f))
        .collect()
}

/// Undecorated half-diagram shapes in the family.
pub fn enumerate_half_shapes(f: Family, n: usize, lambda: usize) -> Result<Vec<Diagram>> {
    if !f.admits_lambda(n, lambda) {
        return Err(MoebiusError::Precondition(format!("lambda = {lambda} is not admissible for {f} with n = {n}")));
    }
    let mut out = Vec::new();
    for part in set_partitions(n) {
        if part.len() < lambda {
            continue;
        }
        for chosen in combinations(part.len(), lambda) {
            let mut blocks = Vec::with_capacity(part.len());
            let mut top = 0;
            for (bi, b) in part.iter().enumerate() {
                let mut nodes: Vec<NodeId> = b.iter().map(|&i| NodeId::bottom(i)).collect();
                if chosen.contains(&bi) {
                    top += 1;
                    nodes.push(NodeId::top(top));
                }
                blocks.push(Block::new(nodes, Decoration::NONE));
            }
            let d = Diagram::from_blocks_unchecked(n, lambda, blocks);
            if is_member(&d, f) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// All decorations `[0, K) x {0, 1, 2}` on `count` blocks, lexicographic.
pub fn decoration_tuples(count: usize, k: usize) -> Vec<Vec<Decoration>> {
    let per = 3 * k;
    let total = per.pow(count as u32);
    (0..total)
        .map(|mut code| {
            let mut v = vec![Decoration::NONE; count];
            for slot in v.iter_mut().rev() {
                let c = code % per;
                code /= per;
                *slot = Decoration::new(c / 3, c % 3);
            }
            v
        })
        .collect()
}

/// Every decorated half diagram, shapes first then decorations.
pub fn enumerate_half_diagrams(f: Family, n: usize, lambda: usize, k: usize) -> Result<Vec<HalfDiagram>> {
    if k == 0 {
        return Err(MoebiusError::Precondition("K must be positive".into()));
    }
    let mut out = Vec::new();
    for shape in enumerate_half_shapes(f, n, lambda)? {
        let free: Vec<usize> = (0..shape.blocks().len()).filter(|&i| !shape.blocks()[i].is_through()).collect();
        for decs in decoration_tuples(free.len(), k) {
            let mut all = vec![Decoration::NONE; shape.blocks().len()];
            for (&slot, dec) in free.iter().zip(decs) {
                all[slot] = dec;
            }
            out.push(HalfDiagram { base: shape.with_decorations(&all), lambda_ts: lambda });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellCoords {
    pub family: Family,
    pub n: usize,
    pub lambda_ts: usize,
    pub left_index: usize,
    pub right_index: usize,
}

/// Locates the bottom and the reflected top of `d` in the half-diagram enumerations.
pub fn cell_of(d: &Diagram, f: Family, mp: MonoidParams) -> Result<CellCoords> {
    if !is_member(d, f) {
        return Err(MoebiusError::Precondition(format!("{d} is not in the {f} family")));
    }
    let fz = factorize(d, mp);
    let find = |size: usize, half: &Diagram| -> Result<usize> {
        enumerate_half_diagrams(f, size, fz.lambda_ts, mp.k())?
            .iter()
            .position(|h| &h.base == half)
            .ok_or_else(|| MoebiusError::Invariant(format!("half {half} missing from the enumeration")))
    };
    Ok(CellCoords {
        family: f,
        n: d.n(),
        lambda_ts: fz.lambda_ts,
        left_index: find(d.n(), &fz.bottom)?,
        right_index: find(d.m(), &star(&fz.top))?,
    })
}

/// Green's partitions, each class sorted and classes ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreensCells {
    pub l: Vec<Vec<usize>>,
    pub r: Vec<Vec<usize>>,
    pub j: Vec<Vec<usize>>,
    pub h: Vec<Vec<usize>>,
}

type BitSet = Vec<u64>;

fn bit_set(s: &mut BitSet, i: usize) {
    s[i / 64] |= 1 << (i % 64);
}

fn bit_get(s: &BitSet, i: usize) -> bool {
    s[i / 64] >> (i % 64) & 1 == 1
}

/// Mutual-containment classes of principal ideals.
fn ideal_classes(ideals: &[BitSet]) -> Vec<usize> {
    let n = ideals.len();
    let mut label = vec![usize::MAX; n];
    for a in 0..n {
        if label[a] != usize::MAX {
            continue;
        }
        label[a] = a;
        for b in a + 1..n {
            if label[b] == usize::MAX && bit_get(&ideals[a], b) && bit_get(&ideals[b], a) {
                label[b] = a;
            }
        }
    }
    label
}

/// L-, R-, J- and H-classes of the semigroup with table `mul[a * size + b] = a·b`.
/// J is computed as D, which agrees with J for finite semigroups.
pub fn greens_cells_bruteforce(size: usize, mul: &[usize]) -> Result<GreensCells> {
    if size > GREENS_GUARD {
        return Err(MoebiusError::Guard(format!("{size} elements exceeds {GREENS_GUARD}")));
    }
    if mul.len() != size * size || mul.iter().any(|&x| x >= size) {
        return Err(MoebiusError::Precondition("multiplication table is not closed".into()));
    }
    let words = size.div_ceil(64).max(1);
    let mut left = vec![vec![0u64; words]; size];
    let mut right = vec![vec![0u64; words]; size];
    for a in 0..size {
        bit_set(&mut left[a], a);
        bit_set(&mut right[a], a);
        for c in 0..size {
            bit_set(&mut left[a], mul[c * size + a]);
            bit_set(&mut right[a], mul[a * size + c]);
        }
    }
    let l_label = ideal_classes(&left);
    let r_label = ideal_classes(&right);
    let mut uf = UnionFind::<usize>::new(size);
    for a in 0..size {
        uf.union(a, l_label[a]);
        uf.union(a, r_label[a]);
    }
    let j_label: Vec<usize> = (0..size).map(|a| uf.find(a)).collect();
    let h_label: Vec<(usize, usize)> = (0..size).map(|a| (l_label[a], r_label[a])).collect();
    Ok(GreensCells {
        l: classes_from_labels(l_label),
        r: classes_from_labels(r_label),
        j: classes_from_labels(j_label),
        h: classes_from_labels(h_label),
    })
}

/// `top ∘ middle ∘ bottom` for given halves.
pub fn sandwich(bottom: &HalfDiagram, middle: &WreathElem, top_star: &HalfDiagram) -> Diagram {
    let lower = crate::diagram::compose_raw(&middle.to_diagram(), &bottom.base).expect("matching boundaries");
    crate::diagram::compose_raw(&star(&top_star.base), &lower.diagram).expect("matching boundaries").diagram
}

/// All diagrams of `Hom(n, n)` in the family with `lambda` through strands and reduced decorations.
pub fn jcell_elements(f: Family, n: usize, lambda: usize, mp: MonoidParams) -> Result<Vec<Diagram>> {
    let halves = enumerate_half_diagrams(f, n, lambda, mp.k())?;
    let middles = wreath_elements(mp, lambda, f.is_planar());
    let mut out = Vec::with_capacity(halves.len() * halves.len() * middles.len());
    for t in &halves {
        for m in &middles {
            for b in &halves {
                out.push(sandwich(b, m, t));
            }
        }
    }
    Ok(out)
}

/// First `e` in `jcell` with `e∘e = s·e + (terms with fewer than lambda through strands)`, `s ≠ 0`.
pub fn find_strict_idempotent<F>(jcell: &[Diagram], lambda: usize, compose: F) -> Result<Option<(Diagram, Q)>>
where
    F: Fn(&Diagram, &Diagram) -> Result<LinComb>,
{
    for e in jcell {
        let sq = compose(e, e)?;
        let mut top_terms = sq.terms().filter(|(d, _)| d.through_strands() >= lambda);
        let first = top_terms.next();
        if top_terms.next().is_some() {
            continue;
        }
        if let Some((d, s)) = first {
            if d == e && !s.is_zero() {
                return Ok(Some((e.clone(), s.clone())));
            }
        }
    }
    Ok(None)
}

/// For every admissible `lambda`, the first strict idempotent of its J-cell.
pub fn scan_idempotents<F>(
    f: Family,
    n: usize,
    mp: MonoidParams,
    compose: F,
) -> Result<BTreeMap<usize, Option<(Diagram, Q)>>>
where
    F: Fn(&Diagram, &Diagram) -> Result<LinComb>,
{
    let mut out = BTreeMap::new();
    for lambda in (0..=n).filter(|&l| f.admits_lambda(n, l)) {
        let jcell = jcell_elements(f, n, lambda, mp)?;
        out.insert(lambda, find_strict_idempotent(&jcell, lambda, &compose)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroPattern {
    /// Every evaluation parameter vanishes.
    AllZero,
    /// At least one evaluation parameter is nonzero.
    SomeNonzero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexSet {
    pub family: Family,
    pub n: usize,
    pub zero_pattern: ZeroPattern,
    pub apexes: BTreeSet<usize>,
}

/// Tabulated apexes. For the Brauer-type rows "0 or 1, ..., n-2, n" is read as the
/// values of the parity of `n`.
pub fn apex_set(f: Family, n: usize, zero_pattern: ZeroPattern) -> ApexSet {
    let same_parity: BTreeSet<usize> = (0..=n).filter(|l| (n - l) % 2 == 0).collect();
    let all: BTreeSet<usize> = (0..=n).collect();
    let only_n: BTreeSet<usize> = [n].into();
    let mut apexes = match (f, zero_pattern) {
        (Family::Symmetric | Family::PlanarSymmetric, _) => only_n,
        (Family::Brauer | Family::TemperleyLieb, ZeroPattern::SomeNonzero) => same_parity,
        (_, ZeroPattern::SomeNonzero) => all,
        (Family::Partition | Family::PlanarPartition, ZeroPattern::AllZero) => (1..=n).collect(),
        (Family::RookBrauer | Family::Motzkin | Family::Brauer | Family::TemperleyLieb, ZeroPattern::AllZero) => {
            same_parity.into_iter().filter(|&l| l != 0).collect()
        }
        (Family::Rook | Family::PlanarRook, ZeroPattern::AllZero) => only_n,
    };
    // the identity cell always carries an idempotent, which matters only for n = 0
    apexes.insert(n);
    ApexSet { family: f, n, zero_pattern, apexes }
}

/// A fully materialized decorated monoid on `Hom(n, n)` for brute-force checks.
#[derive(Clone, Debug)]
pub struct DecoratedMonoid {
    pub family: Family,
    pub n: usize,
    pub mp: MonoidParams,
    /// Diagram elements; the formal zero, if reached, is the extra last index.
    pub elements: Vec<Diagram>,
    pub zero: Option<usize>,
    pub table: Vec<usize>,
    /// `(lambda, bottom index, middle, top index)` per diagram element.
    pub coords: Vec<(usize, usize, WreathElem, usize)>,
}

impl DecoratedMonoid {
    pub fn build(f: Family, n: usize, mp: MonoidParams, evals: &EvalTable) -> Result<DecoratedMonoid> {
        let mut elements = Vec::new();
        let mut coords = Vec::new();
        for lambda in (0..=n).rev().filter(|&l| f.admits_lambda(n, l)) {
            let halves = enumerate_half_diagrams(f, n, lambda, mp.k())?;
            let middles = wreath_elements(mp, lambda, f.is_planar());
            for (ti, t) in halves.iter().enumerate() {
                for m in &middles {
                    for (bi, b) in halves.iter().enumerate() {
                        elements.push(sandwich(b, m, t));
                        coords.push((lambda, bi, m.clone(), ti));
                    }
                }
            }
        }
        if elements.len() + 1 > GREENS_GUARD {
            return Err(MoebiusError::Guard(format!("{} elements exceeds {GREENS_GUARD}", elements.len())));
        }
        let index: HashMap<&Diagram, usize> = elements.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let count = elements.len();
        let mut products = Vec::with_capacity(count * count);
        let mut needs_zero = false;
        for x in &elements {
            for y in &elements {
                match monoid_compose(x, y, mp, evals)? {
                    Some(z) => products.push(Some(
                        *index.get(&z).ok_or_else(|| MoebiusError::Invariant(format!("{z} escaped the monoid")))?,
                    )),
                    None => {
                        needs_zero = true;
                        products.push(None);
                    }
                }
            }
        }
        let size = count + usize::from(needs_zero);
        let zero = needs_zero.then_some(count);
        let mut table = vec![count; size * size];
        for a in 0..count {
            for b in 0..count {
                table[a * size + b] = products[a * count + b].unwrap_or(count);
            }
        }
        Ok(DecoratedMonoid { family: f, n, mp, elements, zero, table, coords })
    }

    pub fn size(&self) -> usize {
        self.elements.len() + usize::from(self.zero.is_some())
    }

    pub fn greens(&self) -> Result<GreensCells> {
        greens_cells_bruteforce(self.size(), &self.table)
    }

    /// Cells predicted from the sandwich coordinates: a J-cell is a through-strand count
    /// together with a J-class of the middle, L-cells also fix the bottom, R-cells the top.
    pub fn combinatorial_cells(&self) -> Result<GreensCells> {
        let mut middle_classes: HashMap<usize, (HashMap<WreathElem, usize>, GreensCells)> = HashMap::new();
        for &(lambda, ..) in &self.coords {
            if let std::collections::hash_map::Entry::Vacant(v) = middle_classes.entry(lambda) {
                let (mono, els) = CayleyMonoid::wreath(self.mp, lambda, self.family.is_planar());
                let cells = greens_cells_bruteforce(mono.size(), mono.table())?;
                let idx = els.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
                v.insert((idx, cells));
            }
        }
        let class_label = |part: &Vec<Vec<usize>>, x: usize| part.iter().position(|c| c.contains(&x)).unwrap();
        let mut l_lab = Vec::new();
        let mut r_lab = Vec::new();
        let mut j_lab = Vec::new();
        let mut h_lab = Vec::new();
        for (lambda, bi, m, ti) in &self.coords {
            let (idx, cells) = &middle_classes[lambda];
            let mi = idx[m];
            let (lc, rc, jc) = (class_label(&cells.l, mi), class_label(&cells.r, mi), class_label(&cells.j, mi));
            l_lab.push(Some((*lambda, jc, *bi, lc, usize::MAX, usize::MAX)));
            r_lab.push(Some((*lambda, jc, *ti, rc, usize::MAX, usize::MAX)));
            j_lab.push(Some((*lambda, jc, 0, 0, usize::MAX, usize::MAX)));
            h_lab.push(Some((*lambda, jc, *bi, lc, *ti, rc)));
        }
        if self.zero.is_some() {
            for labs in [&mut l_lab, &mut r_lab, &mut j_lab, &mut h_lab] {
                labs.push(None);
            }
        }
        Ok(GreensCells {
            l: classes_from_labels(l_lab),
            r: classes_from_labels(r_lab),
            j: classes_from_labels(j_lab),
            h: classes_from_labels(h_lab),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::compose_diagrams;
    use crate::params::ParamSet;
    use crate::rational::q_int;

    fn mp(k: usize, r: usize) -> MonoidParams {
        MonoidParams::new(k, r).unwrap()
    }

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), b);
        }
    }

    #[test]
    fn member_counts() {
        assert_eq!(enumerate_members(Family::Partition, 2, 2).len(), 15);
        assert_eq!(enumerate_members(Family::PlanarPartition, 2, 2).len(), 14);
        assert_eq!(enumerate_members(Family::Brauer, 2, 2).len(), 3);
        assert_eq!(enumerate_members(Family::TemperleyLieb, 3, 3).len(), 5);
        assert_eq!(enumerate_members(Family::Rook, 2, 2).len(), 7);
        assert_eq!(enumerate_members(Family::Motzkin, 2, 2).len(), 9);
        assert_eq!(enumerate_members(Family::RookBrauer, 2, 2).len(), 10);
        assert_eq!(enumerate_members(Family::Symmetric, 3, 3).len(), 6);
        assert_eq!(enumerate_members(Family::PlanarSymmetric, 3, 3).len(), 1);
        assert!(enumerate_members(Family::Symmetric, 2, 1).is_empty());
        assert_eq!(enumerate_members(Family::Partition, 0, 0), vec![Diagram::empty()]);
    }

    #[test]
    fn half_diagram_examples() {
        assert_eq!(enumerate_half_diagrams(Family::TemperleyLieb, 3, 1, 2).unwrap().len(), 12);
        assert_eq!(enumerate_half_shapes(Family::TemperleyLieb, 3, 1).unwrap().len(), 2);
        let rook = enumerate_half_diagrams(Family::Rook, 1, 0, 1).unwrap();
        assert_eq!(rook.len(), 3);
        let mobs: Vec<usize> = rook.iter().map(|h| h.base.blocks()[0].dec.mob).collect();
        assert_eq!(mobs, vec![0, 1, 2]);
        for f in Family::ALL {
            for n in 0..4 {
                let top = enumerate_half_diagrams(f, n, n, 2).unwrap();
                assert_eq!(top.len(), 1);
                assert_eq!(top[0].base, Diagram::identity(n));
            }
        }
        assert!(enumerate_half_diagrams(Family::Brauer, 3, 2, 1).is_err());
        assert!(enumerate_half_diagrams(Family::Rook, 2, 3, 1).is_err());
    }

    #[test]
    fn half_diagrams_are_well_formed() {
        for f in Family::ALL {
            for n in 0..=3 {
                for lambda in (0..=n).filter(|&l| f.admits_lambda(n, l)) {
                    for h in enumerate_half_diagrams(f, n, lambda, 2).unwrap() {
                        assert_eq!(h.base.through_strands(), lambda);
                        for b in h.base.blocks() {
                            if b.is_through() {
                                assert_eq!(b.top_count(), 1);
                                assert!(b.dec.is_none());
                            }
                            assert!(b.dec.h < 2 && b.dec.mob <= 2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn planar_partition_small_counts() {
        // n = 2: one block (3K choices) or two singletons (9K^2) at lambda 0
        for k in 1..=2 {
            let got = enumerate_half_diagrams(Family::PlanarPartition, 2, 0, k).unwrap().len();
            assert_eq!(got, 3 * k + 9 * k * k);
            let got = enumerate_half_diagrams(Family::PlanarPartition, 2, 1, k).unwrap().len();
            assert_eq!(got, 1 + 2 * 3 * k);
        }
    }

    #[test]
    fn cell_of_examples() {
        let p = mp(1, 1);
        let c = cell_of(&Diagram::identity(3), Family::Partition, p).unwrap();
        assert_eq!((c.lambda_ts, c.left_index, c.right_index), (3, 0, 0));
        let a = crate::diagram::parse_diagram(crate::diagram::tests::EX_A).unwrap();
        let c = cell_of(&a, Family::Partition, p).unwrap();
        assert_eq!(c.lambda_ts, 3);
        let halves = enumerate_half_diagrams(Family::Partition, 6, 3, 1).unwrap();
        assert_eq!(halves[c.left_index].base.to_string(), "6;3;{1,1'}[0,0]|{2,4,5}[0,0]|{3,2'}[0,0]|{6,3'}[0,0]");
        let e1 = Diagram::tl_generator(2, 1);
        assert_eq!(cell_of(&e1, Family::TemperleyLieb, p).unwrap().lambda_ts, 0);
        assert!(cell_of(&Diagram::crossing(), Family::TemperleyLieb, p).is_err());
    }

    #[test]
    fn star_swaps_left_and_right_cells() {
        let p = mp(2, 1);
        for f in [Family::Partition, Family::Motzkin, Family::Brauer] {
            for d in jcell_elements(f, 2, if f == Family::Brauer { 0 } else { 1 }, p).unwrap().iter().step_by(11) {
                let c = cell_of(d, f, p).unwrap();
                let cs = cell_of(&star(d), f, p).unwrap();
                assert_eq!((c.left_index, c.right_index), (cs.right_index, cs.left_index));
            }
        }
    }

    #[test]
    fn greens_examples() {
        let m = CayleyMonoid::m_monoid(mp(3, 1));
        let cells = greens_cells_bruteforce(m.size(), m.table()).unwrap();
        assert_eq!(cells.j.len(), 8);
        assert!(cells.j.contains(&vec![7, 8]));
        let z3 = CayleyMonoid::cyclic_group(3);
        let cells = greens_cells_bruteforce(3, z3.table()).unwrap();
        assert_eq!(cells.j, vec![vec![0, 1, 2]]);
        assert_eq!(cells.h, vec![vec![0, 1, 2]]);
        assert!(greens_cells_bruteforce(2, &[0, 1, 1, 2]).is_err());
    }

    #[test]
    fn greens_left_zero_semigroup() {
        // x·y = x, so S·a = S and a·S = {a}
        let t: Vec<usize> = (0..9).map(|k| k / 3).collect();
        let cells = greens_cells_bruteforce(3, &t).unwrap();
        assert_eq!(cells.l.len(), 1);
        assert_eq!(cells.r.len(), 3);
        assert_eq!(cells.j.len(), 1);
    }

    #[test]
    fn decorated_tl_cells_match_sandwich_description() {
        let p = mp(1, 1);
        let mono = DecoratedMonoid::build(Family::TemperleyLieb, 2, p, &EvalTable::ones(1)).unwrap();
        assert_eq!(mono.size(), 18);
        let brute = mono.greens().unwrap();
        assert_eq!(brute, mono.combinatorial_cells().unwrap());
        // lambda = 0 forms a single J-cell with L-cells = bottoms
        let lambda0: Vec<usize> = (0..mono.elements.len()).filter(|&i| mono.coords[i].0 == 0).collect();
        assert!(brute.j.contains(&lambda0));
    }

    #[test]
    fn apex_examples() {
        assert_eq!(apex_set(Family::Rook, 4, ZeroPattern::AllZero).apexes, [4].into());
        assert_eq!(apex_set(Family::Partition, 3, ZeroPattern::SomeNonzero).apexes, [0, 1, 2, 3].into());
        for zp in [ZeroPattern::AllZero, ZeroPattern::SomeNonzero] {
            assert_eq!(apex_set(Family::Symmetric, 3, zp).apexes, [3].into());
        }
        assert_eq!(apex_set(Family::TemperleyLieb, 4, ZeroPattern::SomeNonzero).apexes, [0, 2, 4].into());
        assert_eq!(apex_set(Family::TemperleyLieb, 4, ZeroPattern::AllZero).apexes, [2, 4].into());
        assert_eq!(apex_set(Family::Motzkin, 3, ZeroPattern::AllZero).apexes, [1, 3].into());
        assert_eq!(apex_set(Family::Partition, 3, ZeroPattern::AllZero).apexes, [1, 2, 3].into());
    }

    #[test]
    fn idempotent_examples() {
        let ps = ParamSet::constant(q_int(1), q_int(0), q_int(0)).unwrap();
        let p = mp(1, 1);
        let compose = |x: &Diagram, y: &Diagram| compose_diagrams(x, y, &ps);
        let cell = jcell_elements(Family::Rook, 2, 1, p).unwrap();
        let (e, s) = find_strict_idempotent(&cell, 1, compose).unwrap().unwrap();
        assert_eq!(s, q_int(1));
        assert_eq!(e.through_strands(), 1);

        let zero = EvalTable::zeros(1);
        let mcompose =
            |x: &Diagram, y: &Diagram| Ok(LinComb::from_monoid(y.n(), x.m(), monoid_compose(x, y, p, &zero)?));
        let cell = jcell_elements(Family::Motzkin, 2, 1, p).unwrap();
        assert!(find_strict_idempotent(&cell, 1, mcompose).unwrap().is_none());

        let cell = jcell_elements(Family::Rook, 2, 2, p).unwrap();
        let (e, s) = find_strict_idempotent(&cell, 2, mcompose).unwrap().unwrap();
        assert_eq!((e, s), (Diagram::identity(2), q_int(1)));
    }
}
