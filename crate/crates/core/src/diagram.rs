//! Decorated partition diagrams and their structural operations.
//!
//! A diagram from `n` bottom nodes to `m` top nodes is a set partition of the
//! `n + m` boundary nodes. Each block carries a handle count `h` and a Möbius
//! count `mob`.

use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{MoebiusError, Result};
use crate::msmall::{MElem, WreathElem};
use crate::params::MonoidParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Bottom,
    Top,
}

/// Boundary node, 1-based. Bottom nodes sort before top nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId {
    pub side: Side,
    pub index: usize,
}

impl NodeId {
    pub fn bottom(index: usize) -> NodeId {
        NodeId { side: Side::Bottom, index }
    }

    pub fn top(index: usize) -> NodeId {
        NodeId { side: Side::Top, index }
    }

    pub fn is_bottom(&self) -> bool {
        self.side == Side::Bottom
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Decoration {
    pub h: usize,
    pub mob: usize,
}

impl Decoration {
    pub const NONE: Decoration = Decoration { h: 0, mob: 0 };

    pub fn new(h: usize, mob: usize) -> Decoration {
        Decoration { h, mob }
    }

    /// `m^3 = h m` applied until `mob <= 2`.
    pub fn normalized(self) -> Decoration {
        if self.mob <= 2 {
            return self;
        }
        let steps = (self.mob - 1) / 2;
        Decoration { h: self.h + steps, mob: self.mob - 2 * steps }
    }

    pub fn is_none(&self) -> bool {
        self.h == 0 && self.mob == 0
    }
}

impl std::ops::Add for Decoration {
    type Output = Decoration;

    fn add(self, other: Decoration) -> Decoration {
        Decoration { h: self.h + other.h, mob: self.mob + other.mob }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub nodes: Vec<NodeId>,
    pub dec: Decoration,
}

impl Block {
    pub fn new(nodes: Vec<NodeId>, dec: Decoration) -> Block {
        Block { nodes, dec }
    }

    pub fn bottom_count(&self) -> usize {
        self.nodes.iter().filter(|x| x.is_bottom()).count()
    }

    pub fn top_count(&self) -> usize {
        self.nodes.len() - self.bottom_count()
    }

    pub fn is_through(&self) -> bool {
        self.bottom_count() > 0 && self.top_count() > 0
    }

    pub fn min_bottom(&self) -> Option<usize> {
        self.nodes.iter().find(|x| x.is_bottom()).map(|x| x.index)
    }

    pub fn min_top(&self) -> Option<usize> {
        self.nodes.iter().find(|x| !x.is_bottom()).map(|x| x.index)
    }
}

/// Canonical diagram: node lists sorted, blocks sorted by their minimal node.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: usize,
    m: usize,
    blocks: Vec<Block>,
}

impl Diagram {
    /// Validates the cover and canonicalizes.
    pub fn new(n: usize, m: usize, mut blocks: Vec<Block>) -> Result<Diagram> {
        let mut seen_b = vec![false; n];
        let mut seen_t = vec![false; m];
        for b in &mut blocks {
            if b.nodes.is_empty() {
                return Err(MoebiusError::Parse("empty block".into()));
            }
            for x in &b.nodes {
                let (seen, bound) = match x.side {
                    Side::Bottom => (&mut seen_b, n),
                    Side::Top => (&mut seen_t, m),
                };
                if x.index == 0 || x.index > bound {
                    return Err(MoebiusError::Parse(format!("node {} out of range", render_node(x))));
                }
                if std::mem::replace(&mut seen[x.index - 1], true) {
                    return Err(MoebiusError::Parse(format!("duplicate node {}", render_node(x))));
                }
            }
            b.nodes.sort_unstable();
        }
        if let Some(i) = seen_b.iter().position(|s| !s) {
            return Err(MoebiusError::Parse(format!("missing bottom node {}", i + 1)));
        }
        if let Some(i) = seen_t.iter().position(|s| !s) {
            return Err(MoebiusError::Parse(format!("missing top node {}'", i + 1)));
        }
        blocks.sort_unstable();
        Ok(Diagram { n, m, blocks })
    }

    /// Trusted constructor for internally produced block lists.
    pub(crate) fn from_blocks_unchecked(n: usize, m: usize, mut blocks: Vec<Block>) -> Diagram {
        for b in &mut blocks {
            b.nodes.sort_unstable();
        }
        blocks.sort_unstable();
        Diagram { n, m, blocks }
    }

    pub fn identity(n: usize) -> Diagram {
        let blocks = (1..=n).map(|i| Block::new(vec![NodeId::bottom(i), NodeId::top(i)], Decoration::NONE)).collect();
        Diagram { n, m: n, blocks }
    }

    pub fn empty() -> Diagram {
        Diagram { n: 0, m: 0, blocks: Vec::new() }
    }

    /// Single strand carrying a decoration.
    pub fn strand(dec: Decoration) -> Diagram {
        Diagram { n: 1, m: 1, blocks: vec![Block::new(vec![NodeId::bottom(1), NodeId::top(1)], dec)] }
    }

    /// `2 -> 0`
    pub fn cup() -> Diagram {
        Diagram { n: 2, m: 0, blocks: vec![Block::new(vec![NodeId::bottom(1), NodeId::bottom(2)], Decoration::NONE)] }
    }

    /// `0 -> 2`
    pub fn cap() -> Diagram {
        star(&Diagram::cup())
    }

    /// The crossing `2 -> 2`.
    pub fn crossing() -> Diagram {
        Diagram::from_blocks_unchecked(
            2,
            2,
            vec![
                Block::new(vec![NodeId::bottom(1), NodeId::top(2)], Decoration::NONE),
                Block::new(vec![NodeId::bottom(2), NodeId::top(1)], Decoration::NONE),
            ],
        )
    }

    /// Temperley-Lieb generator `e_i` on `n` strands (cup and cap at `i, i+1`).
    pub fn tl_generator(n: usize, i: usize) -> Diagram {
        let mut blocks = Vec::new();
        for j in 1..=n {
            if j != i && j != i + 1 {
                blocks.push(Block::new(vec![NodeId::bottom(j), NodeId::top(j)], Decoration::NONE));
            }
        }
        blocks.push(Block::new(vec![NodeId::bottom(i), NodeId::bottom(i + 1)], Decoration::NONE));
        blocks.push(Block::new(vec![NodeId::top(i), NodeId::top(i + 1)], Decoration::NONE));
        Diagram::from_blocks_unchecked(n, n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn with_decorations(&self, decs: &[Decoration]) -> Diagram {
        assert_eq!(decs.len(), self.blocks.len());
        let mut d = self.clone();
        for (b, &dec) in d.blocks.iter_mut().zip(decs) {
            b.dec = dec;
        }
        d
    }

    pub fn is_undecorated(&self) -> bool {
        self.blocks.iter().all(|b| b.dec.is_none())
    }

    pub fn through_strands(&self) -> usize {
        through_strands(self)
    }

    /// Applies `f` to every block decoration.
    pub fn map_decorations(&self, mut f: impl FnMut(Decoration) -> Decoration) -> Diagram {
        let mut d = self.clone();
        for b in &mut d.blocks {
            b.dec = f(b.dec);
        }
        d
    }

    /// Möbius normalization followed by handle reduction in the monoid.
    pub fn reduce_monoid(&self, mp: MonoidParams) -> Diagram {
        self.map_decorations(|dec| {
            let d = dec.normalized();
            Decoration::new(mp.reduce(d.h), d.mob)
        })
    }
}

fn render_node(x: &NodeId) -> String {
    match x.side {
        Side::Bottom => format!("{}", x.index),
        Side::Top => format!("{}'", x.index),
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};", self.n, self.m)?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            let nodes: Vec<String> = b.nodes.iter().map(render_node).collect();
            write!(f, "{{{}}}[{},{}]", nodes.join(","), b.dec.h, b.dec.mob)?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = MoebiusError;

    fn from_str(s: &str) -> Result<Diagram> {
        parse_diagram(s)
    }
}

pub fn render_diagram(d: &Diagram) -> String {
    d.to_string()
}

/// Parses `n;m;{1,2'}[h,mob]|...`. Whitespace is ignored.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: &str| MoebiusError::Parse(format!("{msg} in {text:?}"));
    let mut parts = t.splitn(3, ';');
    let n: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad("bad bottom size"))?;
    let m: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad("bad top size"))?;
    let body = parts.next().ok_or_else(|| bad("missing block list"))?;
    let mut blocks = Vec::new();
    if !body.is_empty() {
        for item in body.split('|') {
            let rest = item.strip_prefix('{').ok_or_else(|| bad("block must start with '{'"))?;
            let (nodes_txt, rest) = rest.split_once('}').ok_or_else(|| bad("unclosed block"))?;
            let dec_txt =
                rest.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| bad("missing decoration"))?;
            let (h_txt, mob_txt) = dec_txt.split_once(',').ok_or_else(|| bad("decoration needs two fields"))?;
            let h: usize = h_txt.parse().map_err(|_| bad("bad handle count"))?;
            let mob: usize = mob_txt.parse().map_err(|_| bad("bad Möbius count"))?;
            let mut nodes = Vec::new();
            for tok in nodes_txt.split(',') {
                let (num, side) = match tok.strip_suffix('\'') {
                    Some(x) => (x, Side::Top),
                    None => (tok, Side::Bottom),
                };
                let index: usize = num.parse().map_err(|_| bad("bad node"))?;
                nodes.push(NodeId { side, index });
            }
            blocks.push(Block::new(nodes, Decoration::new(h, mob)));
        }
    }
    Diagram::new(n, m, blocks)
}

pub fn normalize_mob(d: &Diagram) -> Diagram {
    d.map_decorations(Decoration::normalized)
}

/// Horizontal juxtaposition, `d2` to the right of `d1`.
pub fn tensor(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut blocks = d1.blocks.clone();
    for b in &d2.blocks {
        let nodes = b
            .nodes
            .iter()
            .map(|x| match x.side {
                Side::Bottom => NodeId::bottom(x.index + d1.n),
                Side::Top => NodeId::top(x.index + d1.m),
            })
            .collect();
        blocks.push(Block::new(nodes, b.dec));
    }
    Diagram::from_blocks_unchecked(d1.n + d2.n, d1.m + d2.m, blocks)
}

/// Upside-down reflection.
pub fn star(d: &Diagram) -> Diagram {
    let blocks = d
        .blocks
        .iter()
        .map(|b| {
            let nodes = b
                .nodes
                .iter()
                .map(|x| NodeId { side: if x.is_bottom() { Side::Top } else { Side::Bottom }, index: x.index })
                .collect();
            Block::new(nodes, b.dec)
        })
        .collect();
    Diagram::from_blocks_unchecked(d.m, d.n, blocks)
}

pub fn through_strands(d: &Diagram) -> usize {
    d.blocks.iter().filter(|b| b.is_through()).count()
}

/// Result of stacking two diagrams before any evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawComposite {
    pub diagram: Diagram,
    /// Summed decorations of components that lost contact with the boundary.
    pub closed: Vec<Decoration>,
}

/// `f ∘ g`: `g`'s top is glued to `f`'s bottom. Decorations of merged blocks add up.
pub fn compose_raw(f: &Diagram, g: &Diagram) -> Result<RawComposite> {
    if f.n != g.m {
        return Err(MoebiusError::Boundary(format!("cannot compose {}->{} after {}->{}", f.n, f.m, g.n, g.m)));
    }
    let gb = g.blocks.len();
    let total = gb + f.blocks.len();
    let mut uf = UnionFind::<usize>::new(total);
    // block of g touching middle node j, block of f touching middle node j
    let mut g_at = vec![usize::MAX; g.m + 1];
    for (bi, b) in g.blocks.iter().enumerate() {
        for x in b.nodes.iter().filter(|x| !x.is_bottom()) {
            g_at[x.index] = bi;
        }
    }
    for (bi, b) in f.blocks.iter().enumerate() {
        for x in b.nodes.iter().filter(|x| x.is_bottom()) {
            uf.union(g_at[x.index], gb + bi);
        }
    }
    let mut acc: Vec<Option<(Vec<NodeId>, Decoration)>> = vec![None; total];
    for (bi, b) in g.blocks.iter().chain(f.blocks.iter()).enumerate() {
        let root = uf.find(bi);
        let entry = acc[root].get_or_insert_with(|| (Vec::new(), Decoration::NONE));
        entry.1 = entry.1 + b.dec;
        if bi < gb {
            entry.0.extend(b.nodes.iter().filter(|x| x.is_bottom()).copied());
        } else {
            entry.0.extend(b.nodes.iter().filter(|x| !x.is_bottom()).copied());
        }
    }
    let mut blocks = Vec::new();
    let mut closed = Vec::new();
    for (nodes, dec) in acc.into_iter().flatten() {
        if nodes.is_empty() {
            closed.push(dec);
        } else {
            blocks.push(Block::new(nodes, dec));
        }
    }
    closed.sort_unstable();
    Ok(RawComposite { diagram: Diagram::from_blocks_unchecked(g.n, f.m, blocks), closed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Partition,
    PlanarPartition,
    RookBrauer,
    Motzkin,
    Brauer,
    TemperleyLieb,
    Rook,
    PlanarRook,
    Symmetric,
    PlanarSymmetric,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Partition,
        Family::PlanarPartition,
        Family::RookBrauer,
        Family::Motzkin,
        Family::Brauer,
        Family::TemperleyLieb,
        Family::Rook,
        Family::PlanarRook,
        Family::Symmetric,
        Family::PlanarSymmetric,
    ];

    pub fn is_planar(self) -> bool {
        matches!(
            self,
            Family::PlanarPartition
                | Family::Motzkin
                | Family::TemperleyLieb
                | Family::PlanarRook
                | Family::PlanarSymmetric
        )
    }

    /// Same block rules without the planarity constraint.
    pub fn nonplanar_version(self) -> Family {
        match self {
            Family::PlanarPartition => Family::Partition,
            Family::Motzkin => Family::RookBrauer,
            Family::TemperleyLieb => Family::Brauer,
            Family::PlanarRook => Family::Rook,
            Family::PlanarSymmetric => Family::Symmetric,
            f => f,
        }
    }

    /// Whether a diagram in `Hom(n, n)` of this family can have `lambda` through strands.
    pub fn admits_lambda(self, n: usize, lambda: usize) -> bool {
        if lambda > n {
            return false;
        }
        match self.nonplanar_version() {
            Family::Brauer => (n - lambda) % 2 == 0,
            Family::Symmetric => lambda == n,
            _ => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Partition => "partition",
            Family::PlanarPartition => "planar-partition",
            Family::RookBrauer => "rook-brauer",
            Family::Motzkin => "motzkin",
            Family::Brauer => "brauer",
            Family::TemperleyLieb => "temperley-lieb",
            Family::Rook => "rook",
            Family::PlanarRook => "planar-rook",
            Family::Symmetric => "symmetric",
            Family::PlanarSymmetric => "planar-symmetric",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = MoebiusError;

    fn from_str(s: &str) -> Result<Family> {
        let key: String = s.to_ascii_lowercase().chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        Ok(match key.as_str() {
            "partition" | "p" => Family::Partition,
            "planarpartition" | "pp" => Family::PlanarPartition,
            "rookbrauer" | "robr" => Family::RookBrauer,
            "motzkin" | "mo" => Family::Motzkin,
            "brauer" | "br" => Family::Brauer,
            "temperleylieb" | "tl" => Family::TemperleyLieb,
            "rook" | "ro" => Family::Rook,
            "planarrook" | "pro" => Family::PlanarRook,
            "symmetric" | "sym" => Family::Symmetric,
            "planarsymmetric" | "psym" => Family::PlanarSymmetric,
            _ => return Err(MoebiusError::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// Position of a node when walking the rectangle B1..Bn then Tm..T1.
fn circular_pos(d: &Diagram, x: &NodeId) -> usize {
    match x.side {
        Side::Bottom => x.index - 1,
        Side::Top => d.n + d.m - x.index,
    }
}

pub fn is_planar(d: &Diagram) -> bool {
    let mut label = vec![0usize; d.n + d.m];
    for (bi, b) in d.blocks.iter().enumerate() {
        for x in &b.nodes {
            label[circular_pos(d, x)] = bi;
        }
    }
    // Two blocks cross iff their restricted label sequence alternates at least abab.
    for a in 0..d.blocks.len() {
        for b in a + 1..d.blocks.len() {
            let mut runs = 0;
            let mut last = usize::MAX;
            for &l in &label {
                if (l == a || l == b) && l != last {
                    runs += 1;
                    last = l;
                }
            }
            if runs >= 4 {
                return false;
            }
        }
    }
    true
}

/// Membership ignores decorations.
pub fn is_member(d: &Diagram, f: Family) -> bool {
    let blocks_ok = d.blocks.iter().all(|b| {
        let (bot, top) = (b.bottom_count(), b.top_count());
        match f.nonplanar_version() {
            Family::Partition => true,
            Family::RookBrauer => bot + top <= 2,
            Family::Brauer => bot + top == 2,
            Family::Rook => bot <= 1 && top <= 1,
            Family::Symmetric => bot == 1 && top == 1,
            _ => unreachable!(),
        }
    });
    blocks_ok && (!f.is_planar() || is_planar(d))
}

/// `top ∘ middle ∘ bottom` with decorations of through blocks carried by the middle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    /// `lambda -> m`
    pub top: Diagram,
    pub middle: WreathElem,
    /// `n -> lambda`
    pub bottom: Diagram,
    pub lambda_ts: usize,
}

impl Factorization {
    pub fn recompose(&self) -> Diagram {
        let mid = self.middle.to_diagram();
        let lower = compose_raw(&mid, &self.bottom).expect("factorization boundaries agree");
        let full = compose_raw(&self.top, &lower.diagram).expect("factorization boundaries agree");
        debug_assert!(lower.closed.is_empty() && full.closed.is_empty());
        full.diagram
    }
}

/// Splits `d` into its bottom half, middle and top half.
pub fn factorize(d: &Diagram, mp: MonoidParams) -> Factorization {
    let d = d.reduce_monoid(mp);
    let through: Vec<&Block> = d.blocks.iter().filter(|b| b.is_through()).collect();
    let lambda = through.len();
    // bottom order is block order already (bottom nodes sort first)
    let mut top_order: Vec<usize> = (0..lambda).collect();
    top_order.sort_by_key(|&i| through[i].min_top());
    let mut top_rank = vec![0; lambda];
    for (rank, &i) in top_order.iter().enumerate() {
        top_rank[i] = rank;
    }

    let mut bottom_blocks = Vec::new();
    let mut top_blocks = Vec::new();
    let mut through_seen = 0;
    let mut perm = vec![0; lambda];
    let mut strands = vec![MElem::ONE; lambda];
    for b in &d.blocks {
        let bots: Vec<NodeId> = b.nodes.iter().filter(|x| x.is_bottom()).copied().collect();
        let tops: Vec<NodeId> = b.nodes.iter().filter(|x| !x.is_bottom()).copied().collect();
        if b.is_through() {
            let p = through_seen;
            through_seen += 1;
            let q = top_rank[p];
            perm[p] = q;
            strands[q] = MElem::new(b.dec.h, b.dec.mob);
            let mut nb = bots;
            nb.push(NodeId::top(p + 1));
            bottom_blocks.push(Block::new(nb, Decoration::NONE));
            let mut nt = vec![NodeId::bottom(q + 1)];
            nt.extend(tops);
            top_blocks.push(Block::new(nt, Decoration::NONE));
        } else if tops.is_empty() {
            bottom_blocks.push(Block::new(bots, b.dec));
        } else {
            top_blocks.push(Block::new(tops, b.dec));
        }
    }
    Factorization {
        top: Diagram::from_blocks_unchecked(lambda, d.m, top_blocks),
        middle: WreathElem::new(strands, perm).expect("perm built as a bijection"),
        bottom: Diagram::from_blocks_unchecked(d.n, lambda, bottom_blocks),
        lambda_ts: lambda,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub const EX_A: &str = "6;6;{1,2'}[0,0]|{2,4,5}[0,0]|{3,3'}[0,0]|{6,1',4',6'}[0,0]|{5'}[0,0]";
    pub const EX_B: &str = "6;6;{1,1'}[0,0]|{2,4,5}[0,0]|{3}[0,0]|{6,2',4',6'}[0,0]|{3'}[0,0]|{5'}[0,0]";
    pub const EX_AB: &str = "6;6;{1,2'}[0,0]|{2,4,5}[0,0]|{3}[0,0]|{6,1',4',6'}[0,0]|{3'}[0,0]|{5'}[0,0]";

    pub fn d(s: &str) -> Diagram {
        parse_diagram(s).unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        for s in [EX_A, "1;1;{1,1'}[0,0]", "1;1;{1,1'}[2,1]", "0;0;", "2;0;{1,2}[0,3]"] {
            assert_eq!(d(s).to_string(), s);
        }
        let a = d(EX_A);
        assert_eq!((a.n(), a.m(), a.blocks().len()), (6, 6, 5));
        assert_eq!(d("1;1;{1,1'}[0,0]"), Diagram::identity(1));
        assert_eq!(d("1;1;{1,1'}[2,1]").blocks()[0].dec, Decoration::new(2, 1));
    }

    #[test]
    fn parse_canonicalizes_order_and_whitespace() {
        let x = d(" 2 ; 2 ; {2',1}[0,0] | {2,1'}[1,0] ");
        assert_eq!(x.to_string(), "2;2;{1,2'}[0,0]|{2,1'}[1,0]");
    }

    #[test]
    fn parse_errors() {
        for s in [
            "1;1;{1}[0,0]",
            "1;1;{1,1'}[0,0]|{1}[0,0]",
            "1;1;{1,1'}[-1,0]",
            "1;1;{1,2'}[0,0]",
            "1;1;{1,1'}",
            "x;1;{1,1'}[0,0]",
            "1;1;{1,1'}[0]",
            "1;1;{}[0,0]|{1,1'}[0,0]",
        ] {
            assert!(parse_diagram(s).is_err(), "{s} should fail");
        }
    }

    #[test]
    fn mob_normalization_examples() {
        assert_eq!(Decoration::new(0, 3).normalized(), Decoration::new(1, 1));
        assert_eq!(Decoration::new(0, 2).normalized(), Decoration::new(0, 2));
        assert_eq!(Decoration::new(2, 5).normalized(), Decoration::new(4, 1));
        assert_eq!(Decoration::new(0, 4).normalized(), Decoration::new(1, 2));
    }

    #[test]
    fn tensor_examples() {
        let a = d(EX_A);
        assert_eq!(tensor(&a, &Diagram::empty()), a);
        assert_eq!(tensor(&Diagram::identity(1), &Diagram::identity(1)), Diagram::identity(2));
        let b = d(EX_B);
        let ab = tensor(&a, &b);
        assert_eq!((ab.n(), ab.m()), (12, 12));
        assert_eq!(ab.blocks().len(), 11);
        assert!(ab.to_string().contains("{12,8',10',12'}[0,0]"));
        assert!(ab.to_string().contains("{8,10,11}[0,0]"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&Diagram::cup()), Diagram::cap());
        assert_eq!(Diagram::cap().to_string(), "0;2;{1',2'}[0,0]");
        let a = d(EX_A);
        assert_eq!(star(&star(&a)), a);
        assert_eq!(star(&Diagram::identity(4)), Diagram::identity(4));
    }

    #[test]
    fn through_strand_examples() {
        assert_eq!(through_strands(&d(EX_A)), 3);
        assert_eq!(through_strands(&Diagram::identity(5)), 5);
        assert_eq!(through_strands(&Diagram::cup()), 0);
    }

    #[test]
    fn membership_examples() {
        // rook-Brauer element with a singleton, a top pair and crossings
        let robr = d("6;6;{1,2'}[0,0]|{2,3}[0,0]|{4,1'}[0,0]|{5}[0,0]|{6,6'}[0,0]|{3',5'}[0,0]|{4'}[0,0]");
        assert!(is_member(&robr, Family::RookBrauer));
        assert!(!is_member(&robr, Family::Brauer));
        let id = Diagram::identity(3).map_decorations(|_| Decoration::new(2, 1));
        for f in Family::ALL {
            assert!(is_member(&id, f), "{f}");
        }
        let s = Diagram::crossing();
        for f in Family::ALL {
            let expected =
                matches!(f, Family::Partition | Family::Rook | Family::Brauer | Family::Symmetric | Family::RookBrauer);
            assert_eq!(is_member(&s, f), expected, "{f}");
        }
    }

    #[test]
    fn planarity_reads_the_rectangle_boundary() {
        // cap over two through strands is planar; nested arcs are planar; interleaving is not
        assert!(is_planar(&d("2;2;{1,2}[0,0]|{1',2'}[0,0]")));
        assert!(is_planar(&d("4;0;{1,4}[0,0]|{2,3}[0,0]")));
        assert!(!is_planar(&d("4;0;{1,3}[0,0]|{2,4}[0,0]")));
        assert!(is_planar(&d("1;1;{1}[0,0]|{1'}[0,0]")));
        assert!(!is_planar(&d("3;1;{1,3}[0,0]|{2,1'}[0,0]")));
        assert!(is_planar(&d("3;1;{1,2}[0,0]|{3,1'}[0,0]")));
    }

    #[test]
    fn raw_composition_of_partition_example() {
        let a = d(EX_A);
        let b = d(EX_B);
        let ab = compose_raw(&a, &b).unwrap();
        assert!(ab.closed.is_empty());
        assert_eq!(ab.diagram.to_string(), EX_AB);
    }

    #[test]
    fn raw_composition_counts_loops() {
        let loop_ = compose_raw(&Diagram::cup(), &Diagram::cap()).unwrap();
        assert_eq!(loop_.diagram, Diagram::empty());
        assert_eq!(loop_.closed, vec![Decoration::NONE]);
        assert!(compose_raw(&Diagram::cup(), &Diagram::identity(3)).is_err());
    }

    #[test]
    fn factorize_sandwich_example() {
        // (1⊗1⊗eta) ∘ s_{12} ∘ (mu⊗1): 3 -> 3
        let x = d("3;3;{1,2,2'}[0,0]|{3,1'}[0,0]|{3'}[0,0]");
        let mp = MonoidParams::new(1, 1).unwrap();
        let fz = factorize(&x, mp);
        assert_eq!(fz.lambda_ts, 2);
        assert_eq!(fz.bottom.to_string(), "3;2;{1,2,1'}[0,0]|{3,2'}[0,0]");
        assert_eq!(fz.top.to_string(), "2;3;{1,1'}[0,0]|{2,2'}[0,0]|{3'}[0,0]");
        assert_eq!(fz.middle.perm(), &[1, 0]);
        assert!(fz.middle.strands().iter().all(|s| *s == MElem::ONE));
        assert_eq!(fz.recompose(), x);
    }

    #[test]
    fn factorize_identity_and_strand() {
        let mp = MonoidParams::new(4, 3).unwrap();
        let fz = factorize(&Diagram::identity(3), mp);
        assert_eq!(fz.top, Diagram::identity(3));
        assert_eq!(fz.bottom, Diagram::identity(3));
        assert_eq!(fz.middle, WreathElem::identity(3));
        let fz = factorize(&Diagram::strand(Decoration::new(1, 2)), mp);
        assert_eq!(fz.bottom, Diagram::identity(1));
        assert_eq!(fz.top, Diagram::identity(1));
        assert_eq!(fz.middle.strands(), &[MElem::new(1, 2)]);
    }

    #[test]
    fn factorize_example_a() {
        let mp = MonoidParams::new(1, 1).unwrap();
        let a = d(EX_A);
        let fz = factorize(&a, mp);
        assert_eq!(fz.lambda_ts, 3);
        assert_eq!(fz.bottom.to_string(), "6;3;{1,1'}[0,0]|{2,4,5}[0,0]|{3,2'}[0,0]|{6,3'}[0,0]");
        assert_eq!(fz.recompose(), a);
    }
}
