//! The sandwiched monoid `M = <a, b | ab = ba, ab = b^3, a^K = a^{K-r}>`,
//! finite monoids given by Cayley tables, generalized conjugacy and wreath
//! product types.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cells::greens_cells_bruteforce;
use crate::diagram::{Block, Decoration, Diagram, NodeId};
use crate::error::{MoebiusError, Result};
use crate::params::MonoidParams;
use crate::repcount::partition_count;

/// Size limit for the generalized conjugacy scan.
pub const CONJUGACY_GUARD: usize = 300;

/// `a^i b^j` with `i < K` and `j <= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MElem {
    pub i: usize,
    pub j: usize,
}

impl MElem {
    pub const ONE: MElem = MElem { i: 0, j: 0 };

    pub fn new(i: usize, j: usize) -> MElem {
        MElem { i, j }
    }

    /// Position in [`m_elements`] order.
    pub fn index(&self) -> usize {
        3 * self.i + self.j
    }

    pub fn decoration(&self) -> Decoration {
        Decoration::new(self.i, self.j)
    }
}

impl fmt::Display for MElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, j) => {
                let mut s = String::new();
                if i == 1 {
                    s.push('a');
                } else if i > 1 {
                    s.push_str(&format!("a^{i}"));
                }
                if j == 1 {
                    s.push('b');
                } else if j == 2 {
                    s.push_str("b^2");
                }
                write!(f, "{s}")
            }
        }
    }
}

pub fn m_mul(x: MElem, y: MElem, mp: MonoidParams) -> MElem {
    let mut i = x.i + y.i;
    let mut j = x.j + y.j;
    if j >= 3 {
        j -= 2;
        i += 1;
    }
    MElem { i: mp.reduce(i), j }
}

/// All `3K` elements ordered by `(i, j)`.
pub fn m_elements(mp: MonoidParams) -> Vec<MElem> {
    (0..mp.k()).flat_map(|i| (0..3).map(move |j| MElem::new(i, j))).collect()
}

/// Decorated strands plus a permutation sending bottom position `p` to top position `perm[p]`.
/// `strands[q]` decorates the strand ending at top position `q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WreathElem {
    strands: Vec<MElem>,
    perm: Vec<usize>,
}

impl WreathElem {
    pub fn new(strands: Vec<MElem>, perm: Vec<usize>) -> Result<WreathElem> {
        if strands.len() != perm.len() {
            return Err(MoebiusError::Precondition("strand and permutation lengths differ".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(MoebiusError::Precondition(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(WreathElem { strands, perm })
    }

    pub fn identity(lambda: usize) -> WreathElem {
        WreathElem { strands: vec![MElem::ONE; lambda], perm: (0..lambda).collect() }
    }

    pub fn lambda(&self) -> usize {
        self.perm.len()
    }

    pub fn strands(&self) -> &[MElem] {
        &self.strands
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn perm_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (p, &q) in self.perm.iter().enumerate() {
            inv[q] = p;
        }
        inv
    }

    /// The `lambda -> lambda` diagram of this element.
    pub fn to_diagram(&self) -> Diagram {
        let blocks = self
            .perm
            .iter()
            .enumerate()
            .map(|(p, &q)| Block::new(vec![NodeId::bottom(p + 1), NodeId::top(q + 1)], self.strands[q].decoration()))
            .collect();
        Diagram::from_blocks_unchecked(self.lambda(), self.lambda(), blocks)
    }

    /// Cycles of the permutation, each listed from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.perm[x];
            }
            out.push(cyc);
        }
        out
    }
}

/// `(f; pi)(f'; pi') = (f f'_pi; pi pi')`.
pub fn wreath_mul(x: &WreathElem, y: &WreathElem, mp: MonoidParams) -> Result<WreathElem> {
    if x.lambda() != y.lambda() {
        return Err(MoebiusError::Precondition(format!("wreath lengths differ: {} vs {}", x.lambda(), y.lambda())));
    }
    let xinv = x.perm_inverse();
    let strands = (0..x.lambda()).map(|i| m_mul(x.strands[i], y.strands[xinv[i]], mp)).collect();
    let perm = (0..x.lambda()).map(|p| x.perm[y.perm[p]]).collect();
    Ok(WreathElem { strands, perm })
}

/// All elements of `M ≀ S_lambda`, or of `M^lambda` when `planar`.
pub fn wreath_elements(mp: MonoidParams, lambda: usize, planar: bool) -> Vec<WreathElem> {
    let ms = m_elements(mp);
    let perms = if planar { vec![(0..lambda).collect()] } else { permutations(lambda) };
    let mut strand_lists: Vec<Vec<MElem>> = vec![Vec::new()];
    for _ in 0..lambda {
        strand_lists = strand_lists
            .into_iter()
            .flat_map(|s| {
                ms.iter().map(move |&x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(strand_lists.len() * perms.len());
    for perm in &perms {
        for s in &strand_lists {
            out.push(WreathElem { strands: s.clone(), perm: perm.clone() });
        }
    }
    out
}

/// Permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// A finite monoid as a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyMonoid {
    size: usize,
    mul: Vec<usize>,
    identity: usize,
}

impl CayleyMonoid {
    /// `mul[a * size + b] = a·b`.
    pub fn new(size: usize, mul: Vec<usize>, identity: usize) -> Result<CayleyMonoid> {
        if mul.len() != size * size || identity >= size.max(1) {
            return Err(MoebiusError::Precondition("table has the wrong shape".into()));
        }
        if mul.iter().any(|&x| x >= size) {
            return Err(MoebiusError::Precondition("table is not closed".into()));
        }
        for a in 0..size {
            if mul[identity * size + a] != a || mul[a * size + identity] != a {
                return Err(MoebiusError::Precondition(format!("identity law fails at {a}")));
            }
        }
        Ok(CayleyMonoid { size, mul, identity })
    }

    pub fn from_fn(size: usize, identity: usize, f: impl Fn(usize, usize) -> usize) -> Result<CayleyMonoid> {
        let mul = (0..size * size).map(|k| f(k / size, k % size)).collect();
        CayleyMonoid::new(size, mul, identity)
    }

    /// `M(K, r)` indexed as in [`m_elements`].
    pub fn m_monoid(mp: MonoidParams) -> CayleyMonoid {
        let els = m_elements(mp);
        CayleyMonoid::from_fn(els.len(), 0, |a, b| m_mul(els[a], els[b], mp).index()).expect("M is a monoid")
    }

    /// `M ≀ S_lambda` (or `M^lambda`) together with its element list.
    pub fn wreath(mp: MonoidParams, lambda: usize, planar: bool) -> (CayleyMonoid, Vec<WreathElem>) {
        let els = wreath_elements(mp, lambda, planar);
        let index: HashMap<&WreathElem, usize> = els.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let id = index[&WreathElem::identity(lambda)];
        let mono = CayleyMonoid::from_fn(els.len(), id, |a, b| {
            index[&wreath_mul(&els[a], &els[b], mp).expect("equal lengths")]
        })
        .expect("wreath product is a monoid");
        (mono, els)
    }

    /// The symmetric group on `k` letters, elements in lexicographic order.
    pub fn symmetric_group(k: usize) -> CayleyMonoid {
        let perms = permutations(k);
        let index: HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        CayleyMonoid::from_fn(perms.len(), 0, |a, b| {
            let c: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
            index[&c]
        })
        .expect("S_k is a group")
    }

    /// `Z/k` under addition.
    pub fn cyclic_group(k: usize) -> CayleyMonoid {
        CayleyMonoid::from_fn(k, 0, |a, b| (a + b) % k).expect("Z/k is a group")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn is_associative(&self) -> bool {
        (0..self.size).into_par_iter().all(|a| {
            (0..self.size).all(|b| {
                let ab = self.mul(a, b);
                (0..self.size).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }
}

/// Index and period of the cyclic subsemigroup generated by `x`.
pub fn index_period(x: usize, mono: &CayleyMonoid) -> (usize, usize) {
    let mut first_seen: HashMap<usize, usize> = HashMap::new();
    let mut cur = x;
    let mut k = 1;
    loop {
        if let Some(&prev) = first_seen.get(&cur) {
            return (prev, k - prev);
        }
        first_seen.insert(cur, k);
        cur = mono.mul(cur, x);
        k += 1;
    }
}

/// The unique idempotent power of `x`.
pub fn omega_power(x: usize, mono: &CayleyMonoid) -> usize {
    let (index, period) = index_period(x, mono);
    let k = index.div_ceil(period) * period;
    mono.power(x, k)
}

/// Partition of the elements under generalized conjugacy, classes sorted by least element.
pub fn generalized_conjugacy_classes(mono: &CayleyMonoid) -> Result<Vec<Vec<usize>>> {
    let n = mono.size();
    if n > CONJUGACY_GUARD {
        return Err(MoebiusError::Guard(format!("monoid of size {n} exceeds {CONJUGACY_GUARD}")));
    }
    let omega: Vec<usize> = (0..n).map(|x| omega_power(x, mono)).collect();
    let omega1: Vec<usize> = (0..n).map(|x| mono.mul(omega[x], x)).collect();
    // elements with a given (m^ω, m^{ω+1})
    let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (x, pair) in omega.iter().zip(&omega1).enumerate() {
        by_pair.entry((*pair.0, *pair.1)).or_default().push(x);
    }
    let mut by_omega: HashMap<usize, Vec<usize>> = HashMap::new();
    for (x, &o) in omega.iter().enumerate() {
        by_omega.entry(o).or_default().push(x);
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut local = Vec::new();
            for xp in 0..n {
                let xxp = mono.mul(x, xp);
                let xpx = mono.mul(xp, x);
                if mono.mul(xxp, x) != x || mono.mul(xpx, xp) != xp {
                    continue;
                }
                let Some(ms) = by_omega.get(&xpx) else { continue };
                for &m in ms {
                    let y = mono.mul(mono.mul(x, omega1[m]), xp);
                    if let Some(ns) = by_pair.get(&(xxp, y)) {
                        local.extend(ns.iter().map(|&nn| (m, nn)));
                    }
                }
            }
            local
        })
        .collect();
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in edges {
        uf.union(a, b);
    }
    Ok(classes_from_labels((0..n).map(|x| uf.find(x)).collect()))
}

/// Groups indices by label; classes ordered by least member.
pub(crate) fn classes_from_labels<L: Ord + Clone>(labels: Vec<L>) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<L, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.into_iter().enumerate() {
        groups.entry(l).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Brute-force generalized conjugacy on `M ≀ S_lambda`, only for tiny inputs.
pub fn wreath_conjugacy_classes(mp: MonoidParams, lambda: usize) -> Result<(Vec<WreathElem>, Vec<Vec<usize>>)> {
    if lambda > 2 || 3 * mp.k() > 6 {
        return Err(MoebiusError::Guard(format!(
            "brute-force conjugacy on the wreath product needs lambda <= 2 and |M| <= 6 (got {lambda}, {})",
            3 * mp.k()
        )));
    }
    let (mono, els) = CayleyMonoid::wreath(mp, lambda, false);
    let classes = generalized_conjugacy_classes(&mono)?;
    Ok((els, classes))
}

/// `entries[i][k - 1]` counts `k`-cycles whose cycle product lies in class `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeMatrix {
    pub entries: Vec<Vec<usize>>,
}

impl TypeMatrix {
    /// `sum k·a_{ik}`
    pub fn weight(&self) -> usize {
        self.entries.iter().flat_map(|row| row.iter().enumerate().map(|(k, a)| (k + 1) * a)).sum()
    }
}

/// Type of `w` with respect to a class partition of `M` given by element indices.
pub fn wreath_type(w: &WreathElem, classes: &[Vec<usize>], mp: MonoidParams) -> Result<TypeMatrix> {
    let mut class_of = HashMap::new();
    for (ci, c) in classes.iter().enumerate() {
        for &x in c {
            class_of.insert(x, ci);
        }
    }
    let lambda = w.lambda();
    let inv = w.perm_inverse();
    let mut entries = vec![vec![0; lambda]; classes.len()];
    for cyc in w.cycles() {
        // f(j) f(pi^{-1}(j)) ... starting from the smallest point
        let start = cyc[0];
        let mut prod = MElem::ONE;
        let mut x = start;
        for _ in 0..cyc.len() {
            prod = m_mul(prod, w.strands[x], mp);
            x = inv[x];
        }
        let ci =
            *class_of.get(&prod.index()).ok_or_else(|| MoebiusError::Precondition(format!("{prod} is in no class")))?;
        entries[ci][cyc.len() - 1] += 1;
    }
    Ok(TypeMatrix { entries })
}

/// Distinct types over all of `M ≀ S_lambda`, with classes of `M` from the generalized conjugacy.
pub fn distinct_wreath_types(mp: MonoidParams, lambda: usize) -> Result<BTreeSet<TypeMatrix>> {
    let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(mp))?;
    wreath_elements(mp, lambda, false).iter().map(|w| wreath_type(w, &classes, mp)).collect()
}

/// Whether the brute-force classes of `M ≀ S_lambda` are exactly the fibers of the type map.
pub fn type_fibers_match(mp: MonoidParams, lambda: usize) -> Result<bool> {
    let m_classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(mp))?;
    let (els, classes) = wreath_conjugacy_classes(mp, lambda)?;
    let types: Vec<TypeMatrix> = els.iter().map(|w| wreath_type(w, &m_classes, mp)).collect::<Result<_>>()?;
    let mut seen = BTreeSet::new();
    for class in &classes {
        let t = &types[class[0]];
        if class.iter().any(|&i| &types[i] != t) || !seen.insert(t.clone()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of possible types: compositions of `lambda` into `class_count` parts weighted by partition counts.
pub fn count_types(lambda: usize, class_count: usize) -> BigUint {
    let p: Vec<BigUint> = (0..=lambda).map(partition_count).collect();
    // ways[t] after processing some classes
    let mut ways = vec![BigUint::zero(); lambda + 1];
    ways[0] = BigUint::one();
    for _ in 0..class_count {
        let mut next = vec![BigUint::zero(); lambda + 1];
        for (t, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (s, ps) in p.iter().enumerate().take(lambda + 1 - t) {
                next[t + s] += w * ps;
            }
        }
        ways = next;
    }
    ways[lambda].clone()
}

/// Green structure of `M(K, r)` and the checks against the predicted picture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCellReport {
    pub k: usize,
    pub r: usize,
    pub degenerate: bool,
    pub j_cells: Vec<Vec<MElem>>,
    pub singleton_cells: Vec<MElem>,
    pub j_r: Vec<MElem>,
    pub j_2r: Vec<MElem>,
    pub idempotents_j_r: Vec<MElem>,
    pub idempotents_j_2r: Vec<MElem>,
    pub predicted_idempotent_r: MElem,
    pub predicted_idempotent_2r: MElem,
    pub generator_r: MElem,
    pub generator_2r: MElem,
    pub order_generator_r: usize,
    pub order_generator_2r: usize,
    pub j_r_cyclic: bool,
    pub j_2r_cyclic: bool,
    pub singletons_ok: bool,
    pub matches_prediction: bool,
}

/// Order of `g` in the group on `cell` with identity `e`, if the powers stay in the cell.
fn order_in_cell(g: MElem, e: MElem, cell: &BTreeSet<MElem>, mp: MonoidParams) -> Option<usize> {
    let mut x = g;
    for k in 1..=cell.len() {
        if !cell.contains(&x) {
            return None;
        }
        if x == e {
            return Some(k);
        }
        x = m_mul(x, g, mp);
    }
    None
}

/// A closed subset with identity `e` and an element of full order is cyclic.
fn is_cyclic_group(cell: &BTreeSet<MElem>, e: MElem, mp: MonoidParams) -> bool {
    let closed = cell.iter().all(|&x| cell.iter().all(|&y| cell.contains(&m_mul(x, y, mp))));
    let unital = cell.contains(&e) && cell.iter().all(|&x| m_mul(e, x, mp) == x);
    closed && unital && cell.iter().any(|&g| order_in_cell(g, e, cell, mp) == Some(cell.len()))
}

pub fn m_cell_structure(mp: MonoidParams) -> Result<MCellReport> {
    let (k, r) = (mp.k(), mp.r());
    let els = m_elements(mp);
    let mono = CayleyMonoid::m_monoid(mp);
    let cells = greens_cells_bruteforce(mono.size(), mono.table())?;
    let j_cells: Vec<Vec<MElem>> = cells.j.iter().map(|c| c.iter().map(|&x| els[x]).collect()).collect();
    let base = k - r;

    let singleton_cells: Vec<MElem> = els.iter().copied().filter(|x| x.i < base).collect();
    let singletons_ok = singleton_cells.iter().all(|x| j_cells.iter().any(|c| c == &vec![*x]));
    let j_r: Vec<MElem> = (base..k).map(|i| MElem::new(i, 0)).collect();
    let j_2r: Vec<MElem> = (base..k).flat_map(|i| [MElem::new(i, 1), MElem::new(i, 2)]).collect();
    let mut sorted_r = j_r.clone();
    sorted_r.sort();
    let mut sorted_2r = j_2r.clone();
    sorted_2r.sort();
    let cells_found = j_cells.contains(&sorted_r) && j_cells.contains(&sorted_2r);
    let cell_count_ok = j_cells.len() == singleton_cells.len() + 2;

    let is_idem = |x: MElem| m_mul(x, x, mp) == x;
    let idempotents_j_r: Vec<MElem> = j_r.iter().copied().filter(|&x| is_idem(x)).collect();
    let idempotents_j_2r: Vec<MElem> = j_2r.iter().copied().filter(|&x| is_idem(x)).collect();
    let rho = (r - k % r) % r;
    let rho2 = (2 * r - (k + 1) % r) % r;
    let predicted_idempotent_r = MElem::new(base + rho, 0);
    let predicted_idempotent_2r = MElem::new(base + rho2, 2);

    let generator_r = MElem::new(mp.reduce(base + rho + 1), 0);
    let generator_2r = MElem::new(base + rho, 1);
    let set_r: BTreeSet<MElem> = j_r.iter().copied().collect();
    let set_2r: BTreeSet<MElem> = j_2r.iter().copied().collect();
    let order_generator_r = order_in_cell(generator_r, predicted_idempotent_r, &set_r, mp).unwrap_or(0);
    let order_generator_2r = order_in_cell(generator_2r, predicted_idempotent_2r, &set_2r, mp).unwrap_or(0);
    let j_r_cyclic = is_cyclic_group(&set_r, predicted_idempotent_r, mp);
    let j_2r_cyclic = is_cyclic_group(&set_2r, predicted_idempotent_2r, mp);

    let matches_prediction = singletons_ok
        && cells_found
        && cell_count_ok
        && idempotents_j_r == vec![predicted_idempotent_r]
        && idempotents_j_2r == vec![predicted_idempotent_2r]
        && order_generator_r == r
        && order_generator_2r == 2 * r
        && j_r_cyclic
        && j_2r_cyclic;
    Ok(MCellReport {
        k,
        r,
        degenerate: mp.is_degenerate(),
        j_cells,
        singleton_cells,
        j_r,
        j_2r,
        idempotents_j_r,
        idempotents_j_2r,
        predicted_idempotent_r,
        predicted_idempotent_2r,
        generator_r,
        generator_2r,
        order_generator_r,
        order_generator_2r,
        j_r_cyclic,
        j_2r_cyclic,
        singletons_ok,
        matches_prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(k: usize, r: usize) -> MonoidParams {
        MonoidParams::new(k, r).unwrap()
    }

    fn all_mps(max_k: usize) -> Vec<MonoidParams> {
        let mut out = Vec::new();
        for k in 1..=max_k {
            for r in (1..=k).step_by(2) {
                out.push(mp(k, r));
            }
        }
        out
    }

    #[test]
    fn m_mul_examples() {
        let p = mp(4, 3);
        assert_eq!(m_mul(MElem::new(0, 1), MElem::new(0, 2), p), MElem::new(1, 1));
        for x in m_elements(p) {
            assert_eq!(m_mul(MElem::ONE, x, p), x);
        }
        assert_eq!(m_mul(MElem::new(3, 0), MElem::new(1, 0), p), MElem::new(1, 0));
    }

    #[test]
    fn m_is_commutative_monoid() {
        for p in all_mps(8) {
            let els = m_elements(p);
            assert_eq!(els.len(), 3 * p.k());
            let mono = CayleyMonoid::m_monoid(p);
            assert!(mono.is_associative());
            for &x in &els {
                for &y in &els {
                    assert_eq!(m_mul(x, y, p), m_mul(y, x, p));
                }
            }
        }
    }

    #[test]
    fn cell_structure_small_cases() {
        let rep = m_cell_structure(mp(4, 3)).unwrap();
        assert!(rep.matches_prediction, "{rep:?}");
        assert_eq!(rep.singleton_cells, vec![MElem::new(0, 0), MElem::new(0, 1), MElem::new(0, 2)]);
        assert_eq!(rep.j_r.len(), 3);
        assert_eq!(rep.j_2r.len(), 6);
        assert_eq!(rep.predicted_idempotent_r, MElem::new(3, 0));
        assert!(!rep.degenerate);

        let rep = m_cell_structure(mp(1, 1)).unwrap();
        assert!(rep.degenerate);
        assert!(rep.matches_prediction, "{rep:?}");
        assert_eq!(rep.j_cells, vec![vec![MElem::ONE], vec![MElem::new(0, 1), MElem::new(0, 2)]]);
    }

    #[test]
    fn cell_structure_all_small_parameters() {
        for p in all_mps(8) {
            let rep = m_cell_structure(p).unwrap();
            assert!(rep.matches_prediction, "{p:?}: {rep:?}");
        }
    }

    #[test]
    fn omega_powers() {
        let p = mp(4, 3);
        let mono = CayleyMonoid::m_monoid(p);
        assert_eq!(omega_power(MElem::new(1, 0).index(), &mono), MElem::new(3, 0).index());
        assert_eq!(omega_power(mono.identity(), &mono), mono.identity());
        let z6 = CayleyMonoid::cyclic_group(6);
        for x in 0..6 {
            assert_eq!(omega_power(x, &z6), 0);
        }
    }

    #[test]
    fn conjugacy_counts() {
        for p in all_mps(8).into_iter().filter(|p| p.r() < p.k()) {
            let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(p)).unwrap();
            assert_eq!(classes.len(), 1 + 3 * p.r(), "{p:?}");
        }
        let s3 = generalized_conjugacy_classes(&CayleyMonoid::symmetric_group(3)).unwrap();
        assert_eq!(s3.len(), 3);
        let trivial = CayleyMonoid::new(1, vec![0], 0).unwrap();
        assert_eq!(generalized_conjugacy_classes(&trivial).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn conjugacy_guard() {
        let big = CayleyMonoid::cyclic_group(301);
        assert!(matches!(generalized_conjugacy_classes(&big), Err(MoebiusError::Guard(_))));
        assert!(wreath_conjugacy_classes(mp(2, 1), 3).is_err());
        assert!(wreath_conjugacy_classes(mp(3, 1), 2).is_err());
    }

    #[test]
    fn wreath_mul_examples() {
        let p = mp(2, 1);
        let b = MElem::new(0, 1);
        let b2 = MElem::new(0, 2);
        let x = WreathElem::new(vec![b, MElem::ONE], vec![0, 1]).unwrap();
        let y = WreathElem::new(vec![b2, MElem::ONE], vec![1, 0]).unwrap();
        let xy = wreath_mul(&x, &y, p).unwrap();
        assert_eq!(xy.strands(), &[MElem::new(1, 1), MElem::ONE]);
        assert_eq!(xy.perm(), &[1, 0]);
        let id = WreathElem::identity(2);
        assert_eq!(wreath_mul(&id, &y, p).unwrap(), y);
        assert_eq!(wreath_mul(&y, &id, p).unwrap(), y);
        assert!(wreath_mul(&id, &WreathElem::identity(3), p).is_err());
    }

    #[test]
    fn pure_permutations_multiply_like_sn() {
        let p = mp(1, 1);
        for a in permutations(3) {
            for b in permutations(3) {
                let x = WreathElem::new(vec![MElem::ONE; 3], a.clone()).unwrap();
                let y = WreathElem::new(vec![MElem::ONE; 3], b.clone()).unwrap();
                let c: Vec<usize> = (0..3).map(|i| a[b[i]]).collect();
                assert_eq!(wreath_mul(&x, &y, p).unwrap().perm(), &c[..]);
            }
        }
    }

    #[test]
    fn wreath_product_matches_diagram_composition() {
        let p = mp(2, 1);
        let els = wreath_elements(p, 2, false);
        for x in els.iter().step_by(7) {
            for y in els.iter().step_by(5) {
                let xy = wreath_mul(x, y, p).unwrap();
                let raw = crate::diagram::compose_raw(&x.to_diagram(), &y.to_diagram()).unwrap();
                assert_eq!(raw.diagram.reduce_monoid(p), xy.to_diagram());
            }
        }
    }

    #[test]
    fn wreath_is_associative() {
        let (mono, els) = CayleyMonoid::wreath(mp(1, 1), 3, false);
        assert_eq!(els.len(), 27 * 6);
        assert!(mono.is_associative());
    }

    #[test]
    fn type_examples() {
        let p = mp(2, 1);
        let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(p)).unwrap();
        let class_of = |x: MElem| classes.iter().position(|c| c.contains(&x.index())).unwrap();
        let t = wreath_type(&WreathElem::identity(3), &classes, p).unwrap();
        assert_eq!(t.entries[class_of(MElem::ONE)][0], 3);
        assert_eq!(t.weight(), 3);
        let b = MElem::new(0, 1);
        let w = WreathElem::new(vec![MElem::ONE, b, MElem::ONE], vec![1, 2, 0]).unwrap();
        let t = wreath_type(&w, &classes, p).unwrap();
        let mut expect = vec![vec![0; 3]; classes.len()];
        expect[class_of(b)][2] = 1;
        assert_eq!(t.entries, expect);
    }

    #[test]
    fn count_types_examples() {
        for l in 0..8 {
            assert_eq!(count_types(l, 1), partition_count(l));
        }
        assert_eq!(count_types(2, 2), BigUint::from(5u32));
        assert_eq!(count_types(0, 4), BigUint::from(1u32));
    }

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn wreath3() -> impl Strategy<Value = (WreathElem, Vec<usize>)> {
            (
                prop::collection::vec((0usize..2, 0usize..3), 3),
                Just(permutations(3)).prop_flat_map(prop::sample::select),
                Just(permutations(3)).prop_flat_map(prop::sample::select),
            )
                .prop_map(|(s, p, c)| {
                    let strands = s.into_iter().map(|(i, j)| MElem::new(i, j)).collect();
                    (WreathElem::new(strands, p).unwrap(), c)
                })
        }

        proptest! {
            #[test]
            fn type_is_conjugation_invariant((w, c) in wreath3()) {
                let p = mp(2, 1);
                let classes = generalized_conjugacy_classes(&CayleyMonoid::m_monoid(p)).unwrap();
                let sigma = WreathElem::new(vec![MElem::ONE; 3], c).unwrap();
                let sigma_inv = WreathElem::new(vec![MElem::ONE; 3], sigma.perm_inverse()).unwrap();
                let conj = wreath_mul(&wreath_mul(&sigma, &w, p).unwrap(), &sigma_inv, p).unwrap();
                prop_assert_eq!(wreath_type(&w, &classes, p).unwrap(), wreath_type(&conj, &classes, p).unwrap());
            }

            #[test]
            fn omega_power_is_idempotent_power(x in 0usize..24, k in 1usize..9, rh in 0usize..4) {
                let r = 2 * rh + 1;
                prop_assume!(r <= k && x < 3 * k);
                let mono = CayleyMonoid::m_monoid(mp(k, r));
                let e = omega_power(x, &mono);
                prop_assert!(mono.is_idempotent(e));
                prop_assert!((1..=3 * k).any(|j| mono.power(x, j) == e));
            }
        }
    }
}
