//! Partition diagrams: set partitions of the `2n` vertices `{1..n} ∪ {1'..n'}`.
//!
//! Vertex `v < n` is the top-row point `v+1`, vertex `n + i` the bottom-row
//! point `(i+1)'`. A diagram is stored as the restricted growth string of
//! its blocks over this vertex order: block labels are numbered by first
//! occurrence, which makes the encoding canonical.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_dims, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    labels: Box<[u32]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionConstant {
    /// All singletons, `𝐝`.
    TrivialD,
    /// One block, `𝐤`.
    UniversalK,
    /// Blocks `{i, i'}`.
    Identity,
}

/// Renumbers arbitrary labels by first occurrence.
fn canonical_labels(raw: impl IntoIterator<Item = usize>) -> Box<[u32]> {
    let mut seen: Vec<(usize, u32)> = Vec::new();
    raw.into_iter()
        .map(|l| match seen.iter().find(|(k, _)| *k == l) {
            Some(&(_, v)) => v,
            None => {
                let v = seen.len() as u32;
                seen.push((l, v));
                v
            }
        })
        .collect()
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        DisjointSets {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Partition {
    /// Builds a diagram from any labelling of the `2n` vertices (top row
    /// first); vertices with equal labels share a block.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        if labels.len() != 2 * n {
            return Err(Error::Parse(format!(
                "expected {} labels, found {}",
                2 * n,
                labels.len()
            )));
        }
        Ok(Partition {
            n,
            labels: canonical_labels(labels.iter().copied()),
        })
    }

    /// Builds a diagram from a restricted growth string, which must already
    /// be canonical.
    pub(crate) fn from_rgs(n: usize, rgs: &[u32]) -> Self {
        debug_assert_eq!(rgs.len(), 2 * n);
        Partition {
            n,
            labels: rgs.into(),
        }
    }

    pub fn trivial_d(n: usize) -> Self {
        Partition {
            n,
            labels: (0..2 * n as u32).collect(),
        }
    }

    pub fn universal_k(n: usize) -> Self {
        Partition {
            n,
            labels: vec![0; 2 * n].into_boxed_slice(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            n,
            labels: (0..n as u32).chain(0..n as u32).collect(),
        }
    }

    pub fn constant(kind: PartitionConstant, n: usize) -> Self {
        match kind {
            PartitionConstant::TrivialD => Self::trivial_d(n),
            PartitionConstant::UniversalK => Self::universal_k(n),
            PartitionConstant::Identity => Self::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical block labels, top row then bottom row.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as vertex lists in canonical order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(v);
        }
        blocks
    }

    /// Product by connectivity through a shared middle row.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let offset = self.block_count();
        // Nodes are the blocks of `self` followed by the blocks of `other`;
        // each middle-row vertex glues one block of each.
        let mut sets = DisjointSets::new(offset + other.block_count());
        for i in 0..n {
            sets.union(
                self.labels[n + i] as usize,
                offset + other.labels[i] as usize,
            );
        }
        let top = (0..n).map(|i| self.labels[i] as usize);
        let bottom = (0..n).map(|i| offset + other.labels[n + i] as usize);
        let roots: Vec<usize> = top.chain(bottom).map(|x| sets.find(x)).collect();
        Partition {
            n,
            labels: canonical_labels(roots),
        }
    }

    /// Swaps the two rows.
    pub fn star(&self) -> Self {
        let n = self.n;
        let swapped = (0..n)
            .map(|i| self.labels[n + i] as usize)
            .chain((0..n).map(|i| self.labels[i] as usize));
        Partition {
            n,
            labels: canonical_labels(swapped),
        }
    }

    /// Refinement: every block of `self` lies inside a block of `other`.
    pub fn refinement_le(&self, other: &Self) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        let mut image: Vec<Option<u32>> = vec![None; self.block_count()];
        self.labels.iter().zip(other.labels.iter()).all(|(&a, &b)| {
            let slot = &mut image[a as usize];
            match *slot {
                Some(prev) => prev == b,
                None => {
                    *slot = Some(b);
                    true
                }
            }
        })
    }

    /// For each block, whether it meets the top and the bottom row.
    fn block_rows(&self) -> Vec<(usize, usize)> {
        let mut rows = vec![(0, 0); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            if v < self.n {
                rows[l as usize].0 += 1;
            } else {
                rows[l as usize].1 += 1;
            }
        }
        rows
    }

    pub fn has_transversal(&self) -> bool {
        self.block_rows().iter().any(|&(t, b)| t > 0 && b > 0)
    }

    /// Every block is transversal.
    pub fn is_block_bijection(&self) -> bool {
        self.block_rows().iter().all(|&(t, b)| t > 0 && b > 0)
    }

    /// Every block is a singleton or a pair `{i, j'}`.
    pub fn is_partial_injection_diagram(&self) -> bool {
        self.block_rows()
            .iter()
            .all(|&r| matches!(r, (1, 1) | (1, 0) | (0, 1)))
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }

    fn fmt_vertex(&self, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if v < self.n {
            write!(f, "{}", v + 1)
        } else {
            write!(f, "{}'", v - self.n + 1)
        }
    }
}

/// Number of partitions of an `m`-element set.
pub fn bell(m: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// All diagrams of `P_n` in lexicographic order of their restricted growth
/// strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let m = 2 * n;
    let mut out = Vec::new();
    let mut rgs = vec![0u32; m];
    // maxes[i] = max(rgs[0..i]), with rgs[0] = 0 fixed.
    loop {
        out.push(Partition::from_rgs(n, &rgs));
        let mut i = m;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

impl fmt::Display for Partition {
    /// Blocks separated by ` | `, vertices by spaces, bottom-row vertices
    /// primed, e.g. `1 2 1' | 2'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks().iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            for (m, &v) in block.iter().enumerate() {
                if m > 0 {
                    f.write_str(" ")?;
                }
                self.fmt_vertex(v, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts blocks and vertices in any order; the vertex set must be
    /// exactly `{1..n} ∪ {1'..n'}` for some `n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut parsed: Vec<(bool, usize, usize)> = Vec::new();
        if !s.is_empty() {
            for (block, text) in s.split('|').enumerate() {
                let tokens: Vec<&str> = text.split_whitespace().collect();
                if tokens.is_empty() {
                    return Err(Error::Parse(format!("block {} is empty", block + 1)));
                }
                for tok in tokens {
                    let (digits, primed) = match tok.strip_suffix('\'') {
                        Some(d) => (d, true),
                        None => (tok, false),
                    };
                    let point: usize = digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex {tok:?}")))?;
                    if point == 0 {
                        return Err(Error::Parse(format!("vertex {tok:?} out of range")));
                    }
                    parsed.push((primed, point, block));
                }
            }
        }
        if !parsed.len().is_multiple_of(2) {
            return Err(Error::Parse(format!(
                "odd number of vertices ({})",
                parsed.len()
            )));
        }
        let n = parsed.len() / 2;
        let mut labels: Vec<Option<usize>> = vec![None; 2 * n];
        for (primed, point, block) in parsed {
            if point > n {
                return Err(Error::Parse(format!(
                    "vertex {point} out of range for n = {n}"
                )));
            }
            let v = if primed { n + point - 1 } else { point - 1 };
            if labels[v].replace(block).is_some() {
                return Err(Error::Parse(format!(
                    "vertex {point}{} appears twice",
                    if primed { "'" } else { "" }
                )));
            }
        }
        let labels: Vec<usize> = labels.into_iter().map(|l| l.expect("covered")).collect();
        Partition::from_labels(n, &labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn constants_render() {
        assert_eq!(Partition::trivial_d(2).to_string(), "1 | 2 | 1' | 2'");
        assert_eq!(Partition::universal_k(2).to_string(), "1 2 1' 2'");
        assert_eq!(Partition::identity(2).to_string(), "1 1' | 2 2'");
        assert_eq!(Partition::trivial_d(0), Partition::universal_k(0));
        assert_eq!(Partition::identity(0), Partition::universal_k(0));
        assert_eq!(Partition::trivial_d(0).to_string(), "");
    }

    #[test]
    fn compose_examples() {
        let id = Partition::identity(2);
        for a in all_partitions(2) {
            assert_eq!(id.compose(&a).unwrap(), a);
            assert_eq!(a.compose(&id).unwrap(), a);
        }
        let rows = p("1 2 | 1' 2'");
        assert_eq!(rows.compose(&rows).unwrap(), rows);
        let k = Partition::universal_k(2);
        let d = Partition::trivial_d(2);
        assert_eq!(k.compose(&d).unwrap(), p("1 2 | 1' | 2'"));
        assert!(k.compose(&Partition::universal_k(3)).is_err());
    }

    #[test]
    fn compose_path_through_middle() {
        // top 1 -> middle 2 -> middle 1 -> top 2, and middle 1 -> bottom 1'.
        let swap = p("1 2' | 2 1'");
        let b = p("1 1' 2 | 2'");
        assert_eq!(swap.compose(&b).unwrap(), p("1 2 1' | 2'"));
        let c = p("1 1' | 2 | 2'");
        let e = p("1 2' | 2 | 1'");
        assert_eq!(c.compose(&e).unwrap(), p("1 2' | 2 | 1'"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(Partition::identity(2).star(), Partition::identity(2));
        assert_eq!(p("1 2 1' | 2'").star(), p("1 1' 2' | 2"));
        for a in all_partitions(2) {
            assert_eq!(a.star().star(), a);
            assert_eq!(&a.compose(&a.star()).unwrap().compose(&a).unwrap(), &a);
        }
    }

    #[test]
    fn refinement_examples() {
        let d = Partition::trivial_d(2);
        let k = Partition::universal_k(2);
        for a in all_partitions(2) {
            assert!(d.refinement_le(&a).unwrap());
            assert!(a.refinement_le(&k).unwrap());
        }
        assert!(!Partition::identity(2)
            .refinement_le(&p("1 2 | 1' 2'"))
            .unwrap());
        assert!(p("1 | 2 | 1' 2'").refinement_le(&p("1 2 | 1' 2'")).unwrap());
    }

    #[test]
    fn structural_predicates() {
        let id = Partition::identity(2);
        let k = Partition::universal_k(2);
        let d = Partition::trivial_d(2);
        assert!(id.has_transversal());
        assert!(!p("1 2 | 1' 2'").has_transversal());
        assert!(!d.has_transversal());
        assert!(id.is_block_bijection() && id.is_partial_injection_diagram());
        assert!(k.is_block_bijection() && !k.is_partial_injection_diagram());
        assert!(!d.is_block_bijection() && d.is_partial_injection_diagram());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_partitions(0).len(), 1);
        assert_eq!(all_partitions(1).len(), 2);
        assert_eq!(all_partitions(2).len(), 15);
        assert_eq!(all_partitions(3).len(), 203);
        assert_eq!(bell(0), 1);
        assert_eq!(bell(4), 15);
        assert_eq!(bell(6), 203);
        assert_eq!(bell(8), 4140);
        let all = all_partitions(3);
        assert!(all.windows(2).all(|w| w[0].labels() < w[1].labels()));
        assert_eq!(all[0], Partition::universal_k(3));
        assert_eq!(all.last().unwrap(), &Partition::trivial_d(3));
    }

    #[test]
    fn parse_tolerates_any_order() {
        assert_eq!(p("2' | 1' 2 1"), p("1 2 1' | 2'"));
        assert_eq!(p("1 2 1' | 2'").to_string(), "1 2 1' | 2'");
        assert_eq!(p(""), Partition::trivial_d(0));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "1 | 1' | 2",
            "1 2 | 1'",
            "1 | | 1'",
            "0 0'",
            "1 x'",
            "1 1 | 1' 1'",
        ] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?}");
        }
        // 1 | 1' is fine; 3 | 1' is not.
        assert!("1 | 1'".parse::<Partition>().is_ok());
        assert!("3 | 1'".parse::<Partition>().is_err());
    }
}
