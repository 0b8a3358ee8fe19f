//! Whole-universe computations: enumerate `B_n` or `P_n`, materialise order
//! predicates as boolean matrices over the universe, and generate the
//! sublattice of preorders spanned by Mitsch's order and the two inclusion
//! orders.
//!
//! Preorder matrices reuse [`Relation`] as their bit storage: a preorder on a
//! universe of size `m` is a relation on `m` points, and composition of
//! preorders is relational composition.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use fnv::FnvHasher;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};
use crate::partition_orders;
use crate::relation::{all_relations, Relation};
use crate::relation_orders;

/// Largest `n` enumerated without an explicit override.
pub const UNIVERSE_MAX_N: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UniverseKind {
    Relations,
    Partitions,
}

impl fmt::Display for UniverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UniverseKind::Relations => "relations",
            UniverseKind::Partitions => "partitions",
        })
    }
}

impl FromStr for UniverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" | "B" => Ok(UniverseKind::Relations),
            "partitions" | "P" => Ok(UniverseKind::Partitions),
            other => Err(Error::Parse(format!("unknown universe {other:?}"))),
        }
    }
}

/// Monoid elements the laboratory can enumerate and order.
pub trait Element: Clone + Eq + Hash + fmt::Debug + Send + Sync + Sized + 'static {
    const KIND: UniverseKind;

    fn degree(&self) -> usize;

    /// Every element of the monoid of degree `n`, in canonical order.
    fn enumerate(n: usize) -> Vec<Self>;

    fn product(&self, other: &Self) -> Self;

    /// Inclusion (relations) or refinement (partitions).
    fn included_in(&self, other: &Self) -> bool;

    /// Mitsch's order, evaluated with whatever the table can offer.
    fn mitsch_le(a: &Self, b: &Self, table: &UniverseTable<Self>) -> bool;

    /// `a (⊆∘≤) b` by the closed-form criterion.
    fn incl_then_mitsch(a: &Self, b: &Self) -> bool;

    /// `a (⊇∘≤) b` by the closed-form criterion.
    fn rincl_then_mitsch(a: &Self, b: &Self) -> bool;

    /// Single-line text encoding for reports.
    fn encode(&self) -> String;
}

impl Element for Relation {
    const KIND: UniverseKind = UniverseKind::Relations;

    fn degree(&self) -> usize {
        self.n()
    }

    fn enumerate(n: usize) -> Vec<Self> {
        all_relations(n).collect()
    }

    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn included_in(&self, other: &Self) -> bool {
        self.is_subset_unchecked(other)
    }

    /// Uses the equational criterion.
    fn mitsch_le(a: &Self, b: &Self, _table: &UniverseTable<Self>) -> bool {
        relation_orders::mitsch_le(a, b).expect("same degree")
    }

    fn incl_then_mitsch(a: &Self, b: &Self) -> bool {
        relation_orders::comp_subset_then_le(a, b).expect("same degree")
    }

    fn rincl_then_mitsch(a: &Self, b: &Self) -> bool {
        relation_orders::comp_supset_then_le(a, b).expect("same degree")
    }

    fn encode(&self) -> String {
        self.to_compact()
    }
}

impl Element for Partition {
    const KIND: UniverseKind = UniverseKind::Partitions;

    fn degree(&self) -> usize {
        self.n()
    }

    fn enumerate(n: usize) -> Vec<Self> {
        all_partitions(n)
    }

    fn product(&self, other: &Self) -> Self {
        self.compose_unchecked(other)
    }

    fn included_in(&self, other: &Self) -> bool {
        self.refines_unchecked(other)
    }

    /// Uses the definitional search over the whole table.
    fn mitsch_le(a: &Self, b: &Self, table: &UniverseTable<Self>) -> bool {
        partition_orders::mitsch_le_within(a, b, table.elements()).expect("same degree")
    }

    fn incl_then_mitsch(a: &Self, b: &Self) -> bool {
        partition_orders::comp_subset_then_le(a, b).expect("same degree")
    }

    fn rincl_then_mitsch(a: &Self, b: &Self) -> bool {
        partition_orders::comp_supset_then_le(a, b).expect("same degree")
    }

    fn encode(&self) -> String {
        self.to_string()
    }
}

/// Identifies a universe for compatibility checks between matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniverseId {
    pub kind: UniverseKind,
    pub n: usize,
    pub size: usize,
}

impl fmt::Display for UniverseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) [{} elements]", self.kind, self.n, self.size)
    }
}

/// A complete, canonically ordered enumeration of `B_n` or `P_n`.
#[derive(Debug)]
pub struct UniverseTable<E: Element> {
    n: usize,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    idempotents: OnceLock<Vec<usize>>,
    cayley: OnceLock<Vec<u32>>,
}

impl<E: Element> UniverseTable<E> {
    /// Enumerates the universe; refuses `n > 3`.
    pub fn new(n: usize) -> Result<Self> {
        if n > UNIVERSE_MAX_N {
            return Err(Error::UniverseTooLarge {
                what: "universe enumeration",
                n,
                limit: UNIVERSE_MAX_N,
            });
        }
        Ok(Self::new_unguarded(n))
    }

    pub fn new_unguarded(n: usize) -> Self {
        let elements = E::enumerate(n);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        UniverseTable {
            n,
            elements,
            index,
            idempotents: OnceLock::new(),
            cayley: OnceLock::new(),
        }
    }

    pub fn id(&self) -> UniverseId {
        UniverseId {
            kind: E::KIND,
            n: self.n,
            size: self.elements.len(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Indices of the idempotents, computed on first use.
    pub fn idempotents(&self) -> &[usize] {
        self.idempotents.get_or_init(|| {
            (0..self.elements.len())
                .filter(|&i| {
                    let e = &self.elements[i];
                    e.product(e) == *e
                })
                .collect()
        })
    }

    /// Row-major multiplication table over element indices, built on first use.
    pub fn cayley(&self) -> &[u32] {
        self.cayley.get_or_init(|| {
            self.elements
                .par_iter()
                .flat_map_iter(|a| {
                    self.elements.iter().map(move |b| {
                        let p = a.product(b);
                        self.index[&p] as u32
                    })
                })
                .collect()
        })
    }

    /// Index of the product of elements `i` and `j`.
    #[inline]
    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.cayley()[i * self.elements.len() + j] as usize
    }

    /// Mitsch's order by its definition, `a = a x = b x = y b`, with
    /// witnesses scanned through the multiplication table.
    pub fn mitsch_definitional(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let m = self.elements.len();
        (0..m).any(|x| self.product_index(b, x) == a && self.product_index(a, x) == a)
            && (0..m).any(|y| self.product_index(y, b) == a)
    }

    pub fn idempotent_elements(&self) -> Vec<E> {
        self.idempotents()
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    /// Materialises an arbitrary binary predicate, in parallel by row.
    pub fn materialise_fn<F>(&self, name: impl Into<String>, pred: F) -> PreorderMatrix
    where
        F: Fn(&E, &E) -> bool + Sync,
    {
        let m = self.elements.len();
        let rows: Vec<Vec<usize>> = self
            .elements
            .par_iter()
            .map(|a| (0..m).filter(|&j| pred(a, &self.elements[j])).collect())
            .collect();
        let bits = Relation::from_pairs(
            m,
            rows.into_iter()
                .enumerate()
                .flat_map(|(i, row)| row.into_iter().map(move |j| (i, j))),
        );
        PreorderMatrix {
            universe: self.id(),
            name: name.into(),
            bits,
        }
    }

    pub fn materialise(&self, order: NamedOrder) -> PreorderMatrix {
        let name = order.name();
        match order {
            NamedOrder::Eq => PreorderMatrix {
                universe: self.id(),
                name: name.into(),
                bits: Relation::identity(self.len()),
            },
            NamedOrder::Mitsch => self.materialise_mitsch(name),
            NamedOrder::Incl => self.materialise_fn(name, |a, b| a.included_in(b)),
            NamedOrder::Rincl => self.materialise_fn(name, |a, b| b.included_in(a)),
            NamedOrder::MitschAndIncl => {
                let le = self.materialise_mitsch(name);
                let incl = self.materialise(NamedOrder::Incl);
                intersect_preorders(&le, &incl)
                    .expect("same universe")
                    .with_name(name)
            }
            NamedOrder::MitschAndRincl => {
                let le = self.materialise_mitsch(name);
                let rincl = self.materialise(NamedOrder::Rincl);
                intersect_preorders(&le, &rincl)
                    .expect("same universe")
                    .with_name(name)
            }
            NamedOrder::InclThenMitsch => self.materialise_fn(name, E::incl_then_mitsch),
            NamedOrder::RinclThenMitsch => self.materialise_fn(name, E::rincl_then_mitsch),
        }
    }

    /// Mitsch's order over the table: the equational criterion for
    /// relations, the definitional search for partitions.
    fn materialise_mitsch(&self, name: &str) -> PreorderMatrix {
        match E::KIND {
            UniverseKind::Relations => self.materialise_fn(name, |a, b| E::mitsch_le(a, b, self)),
            UniverseKind::Partitions => {
                self.materialise_index_fn(name, |i, j| self.mitsch_definitional(i, j))
            }
        }
    }

    /// Materialises a predicate on element indices, in parallel by row.
    pub fn materialise_index_fn<F>(&self, name: impl Into<String>, pred: F) -> PreorderMatrix
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let m = self.elements.len();
        let rows: Vec<Vec<usize>> = (0..m)
            .into_par_iter()
            .map(|i| (0..m).filter(|&j| pred(i, j)).collect())
            .collect();
        let bits = Relation::from_pairs(
            m,
            rows.into_iter()
                .enumerate()
                .flat_map(|(i, row)| row.into_iter().map(move |j| (i, j))),
        );
        PreorderMatrix {
            universe: self.id(),
            name: name.into(),
            bits,
        }
    }

    /// All eight named orders and preorders, in [`NamedOrder::ALL`] order.
    pub fn catalogue(&self) -> Vec<PreorderMatrix> {
        NamedOrder::ALL
            .iter()
            .map(|&o| self.materialise(o))
            .collect()
    }

    /// The elements at a matrix position.
    pub fn pair(&self, (i, j): (usize, usize)) -> (&E, &E) {
        (&self.elements[i], &self.elements[j])
    }
}

/// The orders and preorders with canonical names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedOrder {
    Eq,
    Mitsch,
    Incl,
    Rincl,
    MitschAndIncl,
    MitschAndRincl,
    InclThenMitsch,
    RinclThenMitsch,
}

impl NamedOrder {
    pub const ALL: [NamedOrder; 8] = [
        NamedOrder::Eq,
        NamedOrder::Mitsch,
        NamedOrder::Incl,
        NamedOrder::Rincl,
        NamedOrder::MitschAndIncl,
        NamedOrder::MitschAndRincl,
        NamedOrder::InclThenMitsch,
        NamedOrder::RinclThenMitsch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedOrder::Eq => "eq",
            NamedOrder::Mitsch => "mitsch",
            NamedOrder::Incl => "incl",
            NamedOrder::Rincl => "rincl",
            NamedOrder::MitschAndIncl => "mitsch_and_incl",
            NamedOrder::MitschAndRincl => "mitsch_and_rincl",
            NamedOrder::InclThenMitsch => "incl_then_mitsch",
            NamedOrder::RinclThenMitsch => "rincl_then_mitsch",
        }
    }

    /// Whether the named relation is expected to be antisymmetric.
    pub fn is_order(self) -> bool {
        !matches!(
            self,
            NamedOrder::InclThenMitsch | NamedOrder::RinclThenMitsch
        )
    }
}

impl fmt::Display for NamedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedOrder {
    type Err = Error;

    /// Accepts the canonical names, with `-` or `_`, and a few aliases.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        let order = match key.as_str() {
            "eq" | "=" => NamedOrder::Eq,
            "mitsch" | "le" | "leq" => NamedOrder::Mitsch,
            "incl" | "subset" => NamedOrder::Incl,
            "rincl" | "supset" => NamedOrder::Rincl,
            "mitsch_and_incl" | "meet_incl" => NamedOrder::MitschAndIncl,
            "mitsch_and_rincl" | "meet_rev" | "meet_rincl" => NamedOrder::MitschAndRincl,
            "incl_then_mitsch" | "incl_then_le" | "subset_then_le" => NamedOrder::InclThenMitsch,
            "rincl_then_mitsch" | "rincl_then_le" | "supset_then_le" => NamedOrder::RinclThenMitsch,
            _ => return Err(Error::UnknownPredicate(s.to_string())),
        };
        Ok(order)
    }
}

/// A binary relation on a universe, stored as a `|U| × |U|` bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct PreorderMatrix {
    universe: UniverseId,
    name: String,
    bits: Relation,
}

impl fmt::Debug for PreorderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PreorderMatrix({} on {}, {} pairs)",
            self.name,
            self.universe,
            self.bits.len()
        )
    }
}

impl PreorderMatrix {
    pub fn from_bits(
        universe: UniverseId,
        name: impl Into<String>,
        bits: Relation,
    ) -> Result<Self> {
        if bits.n() != universe.size {
            return Err(Error::DimensionMismatch {
                left: bits.n(),
                right: universe.size,
            });
        }
        Ok(PreorderMatrix {
            universe,
            name: name.into(),
            bits,
        })
    }

    pub fn universe(&self) -> UniverseId {
        self.universe
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn bits(&self) -> &Relation {
        &self.bits
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits.contains(i, j)
    }

    /// Number of related pairs.
    pub fn count(&self) -> usize {
        self.bits.len()
    }

    pub fn is_all(&self) -> bool {
        self.bits == Relation::universal(self.universe.size)
    }

    pub fn is_identity(&self) -> bool {
        self.bits == Relation::identity(self.universe.size)
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe.to_string(),
                right: other.universe.to_string(),
            })
        }
    }

    /// Every pair of `self` is a pair of `other`.
    pub fn is_contained_in(&self, other: &Self) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits.is_subset_unchecked(&other.bits))
    }

    pub fn is_preorder(&self) -> bool {
        self.bits.is_preorder()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let sym = self
            .bits
            .intersect(&self.bits.converse())
            .expect("square matrix");
        sym.is_subset_unchecked(&Relation::identity(self.universe.size))
    }

    pub fn is_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.pairs()
    }
}

/// Relational composite `p ; q`: `a` relates to `c` iff `a p b q c` for some `b`.
pub fn compose_preorders(p: &PreorderMatrix, q: &PreorderMatrix) -> Result<PreorderMatrix> {
    p.same_universe(q)?;
    Ok(PreorderMatrix {
        universe: p.universe,
        name: format!("{};{}", p.name, q.name),
        bits: &p.bits * &q.bits,
    })
}

pub fn intersect_preorders(p: &PreorderMatrix, q: &PreorderMatrix) -> Result<PreorderMatrix> {
    p.same_universe(q)?;
    Ok(PreorderMatrix {
        universe: p.universe,
        name: format!("({} & {})", p.name, q.name),
        bits: p.bits.intersect(&q.bits)?,
    })
}

/// Least preorder containing both: reflexive-transitive closure of the union,
/// by repeated squaring.
pub fn closure_join(p: &PreorderMatrix, q: &PreorderMatrix) -> Result<PreorderMatrix> {
    p.same_universe(q)?;
    let mut m = p
        .bits
        .union(&q.bits)?
        .union(&Relation::identity(p.universe.size))?;
    loop {
        let squared = &m * &m;
        if squared == m {
            break;
        }
        m = squared;
    }
    Ok(PreorderMatrix {
        universe: p.universe,
        name: format!("({} | {})", p.name, q.name),
        bits: m,
    })
}

/// The least row-major position in `q` but not in `p`.
pub fn find_separating_witness(
    p: &PreorderMatrix,
    q: &PreorderMatrix,
) -> Result<Option<(usize, usize)>> {
    find_separating_witness_where(p, q, |_, _| true)
}

/// The least row-major position in `q` but not in `p` that satisfies `keep`.
pub fn find_separating_witness_where(
    p: &PreorderMatrix,
    q: &PreorderMatrix,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Option<(usize, usize)>> {
    p.same_universe(q)?;
    let diff = q.bits.intersect(&p.bits.complement())?;
    let first = diff.pairs().find(|&(i, j)| keep(i, j));
    Ok(first)
}

/// One node of a generated sublattice.
#[derive(Debug, Clone)]
pub struct LatticeNode {
    pub label: String,
    /// Further catalogue names that denote the same matrix.
    pub aliases: Vec<String>,
    pub is_order: bool,
    pub matrix: PreorderMatrix,
}

/// A finite sublattice of preorders with its covering edges.
#[derive(Debug, Clone)]
pub struct Sublattice {
    pub universe: UniverseId,
    /// Sorted by label.
    pub nodes: Vec<LatticeNode>,
    /// Covering pairs `(lower, upper)` as node indices, sorted by labels.
    pub edges: Vec<(usize, usize)>,
}

impl Sublattice {
    pub fn node(&self, label: &str) -> Option<&LatticeNode> {
        self.nodes
            .iter()
            .find(|n| n.label == label || n.aliases.iter().any(|a| a == label))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.nodes.iter().map(|n| n.label.as_str()).collect()
    }

    /// Whether meets and joins of any two nodes are nodes again.
    pub fn is_closed(&self) -> Result<bool> {
        let present: HashSet<&Relation> = self.nodes.iter().map(|n| n.matrix.bits()).collect();
        for a in &self.nodes {
            for b in &self.nodes {
                let meet = intersect_preorders(&a.matrix, &b.matrix)?;
                let join = closure_join(&a.matrix, &b.matrix)?;
                if !present.contains(meet.bits()) || !present.contains(join.bits()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Hasse diagram in DOT, drawn bottom to top. Orders are filled circles.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let title = format!("{}_{}", self.universe.kind, self.universe.n);
        writeln!(out, "digraph \"{title}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for node in &self.nodes {
            let style = if node.is_order {
                "shape=circle, style=filled"
            } else {
                "shape=circle, style=solid"
            };
            let label = if node.aliases.is_empty() {
                String::new()
            } else {
                format!(", xlabel=\"{}\"", node.aliases.join(" = "))
            };
            writeln!(out, "  \"{}\" [{style}{label}];", node.label).unwrap();
        }
        for &(lo, hi) in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                self.nodes[lo].label, self.nodes[hi].label
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// 64-bit FNV-1a over the matrix, row-major, one byte per cell.
fn stable_hash(bits: &Relation) -> u64 {
    let m = bits.n();
    let mut h = FnvHasher::default();
    for i in 0..m {
        for j in 0..m {
            h.write_u8(u8::from(bits.contains(i, j)));
        }
    }
    h.finish()
}

/// Closes `generators ∪ {=}` under intersection and join. Nodes equal to a
/// `catalogue` entry take its name (the first match; later matches become
/// aliases); other nodes are labelled by a hash of their matrix.
pub fn generate_sublattice(
    universe: UniverseId,
    generators: &[PreorderMatrix],
    catalogue: &[PreorderMatrix],
) -> Result<Sublattice> {
    let eq = PreorderMatrix {
        universe,
        name: NamedOrder::Eq.name().into(),
        bits: Relation::identity(universe.size),
    };
    let mut members: Vec<PreorderMatrix> = Vec::new();
    let mut seen: HashSet<Relation> = HashSet::new();
    for g in std::iter::once(&eq).chain(generators) {
        eq.same_universe(g)?;
        if !g.is_preorder() {
            return Err(Error::Precondition(format!(
                "generator {} is not a preorder",
                g.name
            )));
        }
        if seen.insert(g.bits.clone()) {
            members.push(g.clone());
        }
    }
    // Only pairs involving at least one new member need combining.
    let mut done = 0;
    while done < members.len() {
        let upto = members.len();
        let mut fresh = Vec::new();
        for i in 0..upto {
            for j in done.max(i)..upto {
                for m in [
                    intersect_preorders(&members[i], &members[j])?,
                    closure_join(&members[i], &members[j])?,
                ] {
                    if seen.insert(m.bits.clone()) {
                        fresh.push(m);
                    }
                }
            }
        }
        done = upto;
        members.extend(fresh);
    }

    let mut nodes: Vec<LatticeNode> = members
        .into_iter()
        .map(|matrix| {
            let mut names = catalogue
                .iter()
                .chain(generators)
                .filter(|c| c.bits == matrix.bits)
                .map(|c| c.name.clone())
                .collect::<Vec<_>>();
            names.dedup();
            let mut unique = Vec::new();
            for name in names {
                if !unique.contains(&name) {
                    unique.push(name);
                }
            }
            let (label, aliases) = if unique.is_empty() {
                (format!("p_{:016x}", stable_hash(&matrix.bits)), Vec::new())
            } else {
                let first = unique.remove(0);
                (first, unique)
            };
            LatticeNode {
                is_order: matrix.is_order(),
                matrix: matrix.with_name(label.clone()),
                label,
                aliases,
            }
        })
        .collect();
    nodes.sort_by(|a, b| a.label.cmp(&b.label));

    let below = |a: usize, b: usize| {
        a != b
            && nodes[a]
                .matrix
                .bits
                .is_subset_unchecked(&nodes[b].matrix.bits)
    };
    let count = nodes.len();
    let mut edges = Vec::new();
    for lo in 0..count {
        for hi in 0..count {
            if below(lo, hi) && !(0..count).any(|mid| below(lo, mid) && below(mid, hi)) {
                edges.push((lo, hi));
            }
        }
    }
    Ok(Sublattice {
        universe,
        nodes,
        edges,
    })
}

/// The sublattice generated by Mitsch's order and both inclusion orders.
pub fn standard_sublattice<E: Element>(table: &UniverseTable<E>) -> Result<Sublattice> {
    let catalogue = table.catalogue();
    let generators: Vec<PreorderMatrix> = [NamedOrder::Mitsch, NamedOrder::Incl, NamedOrder::Rincl]
        .iter()
        .map(|&o| catalogue[o as usize].clone())
        .collect();
    generate_sublattice(table.id(), &generators, &catalogue)
}
