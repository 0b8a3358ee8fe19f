//! Named verification suites. Each suite checks a group of algebraic claims
//! over a whole universe (or a seeded sample of it) and returns a
//! [`CheckReport`].

use std::collections::HashSet;
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice_lab::{
    closure_join, compose_preorders, find_separating_witness, find_separating_witness_where,
    intersect_preorders, standard_sublattice, Element, NamedOrder, PreorderMatrix, UniverseKind,
    UniverseTable,
};
use crate::partition::Partition;
use crate::partition_orders;
use crate::relation::{
    divides_left, divides_right, max_left_solution, max_right_solution, Relation,
};
use crate::relation_orders::{
    comp_subset_then_le, in_f, meet_rev_witnesses, meet_with_reverse_inclusion, mitsch_le,
    mitsch_le_oracle_unguarded, mitsch_le_within,
};
use crate::report::{CheckReport, ClaimResult, SweepMode};

pub const DEFAULT_SAMPLE: usize = 10_000;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub kind: UniverseKind,
    pub n: usize,
    /// Number of random pairs or triples; forces sampling where supported.
    pub sample: Option<usize>,
    pub seed: u64,
    /// Lifts the size guards.
    pub force_large: bool,
}

impl SuiteConfig {
    pub fn new(kind: UniverseKind, n: usize) -> Self {
        SuiteConfig {
            kind,
            n,
            sample: None,
            seed: 0,
            force_large: false,
        }
    }

    pub fn sampled(mut self, sample: usize, seed: u64) -> Self {
        self.sample = Some(sample);
        self.seed = seed;
        self
    }
}

/// Sizes a suite handles for one universe kind.
#[derive(Debug, Clone, Copy)]
pub struct Support {
    pub kind: UniverseKind,
    pub exhaustive_max: usize,
    pub sampled_max: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub support: &'static [Support],
    pub summary: &'static str,
}

const fn rel(exhaustive_max: usize, sampled_max: Option<usize>) -> Support {
    Support {
        kind: UniverseKind::Relations,
        exhaustive_max,
        sampled_max,
    }
}

const fn part(exhaustive_max: usize, sampled_max: Option<usize>) -> Support {
    Support {
        kind: UniverseKind::Partitions,
        exhaustive_max,
        sampled_max,
    }
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "relation-laws",
        support: &[rel(2, Some(3))],
        summary: "associativity, converse and complement laws on B_n",
    },
    SuiteInfo {
        name: "residuation",
        support: &[rel(2, Some(3))],
        summary: "residual characterisation of b x <= a, greatest solutions, divisibility",
    },
    SuiteInfo {
        name: "thm-equational-criterion",
        support: &[rel(2, Some(3))],
        summary: "equational Mitsch test agrees with the existential definition",
    },
    SuiteInfo {
        name: "mitsch-partial-order",
        support: &[rel(2, Some(3)), part(3, None)],
        summary: "Mitsch's relation is reflexive, antisymmetric and transitive",
    },
    SuiteInfo {
        name: "subsemigroup-ix",
        support: &[rel(3, None)],
        summary: "partial injections: restriction coherence and agreement with inclusion",
    },
    SuiteInfo {
        name: "prop-fa",
        support: &[rel(3, None)],
        summary: "on F(alpha), alpha <= beta and Mitsch agrees with reverse inclusion",
    },
    SuiteInfo {
        name: "prop-meet-witness",
        support: &[rel(3, None)],
        summary: "<= meet reverse inclusion iff idempotent witnesses exist",
    },
    SuiteInfo {
        name: "prop-incl-then-le",
        support: &[rel(2, Some(3))],
        summary: "a w a <= b w b criterion for the inclusion-then-Mitsch composite",
    },
    SuiteInfo {
        name: "prop-rincl-then-le",
        support: &[rel(3, None)],
        summary: "reverse-inclusion-then-Mitsch composite is universal on B_n",
    },
    SuiteInfo {
        name: "atoms",
        support: &[rel(3, None)],
        summary: "inclusion atoms are Mitsch atoms; permutations are Mitsch-maximal",
    },
    SuiteInfo {
        name: "join-closure",
        support: &[rel(3, None), part(3, None)],
        summary: "composites are preorders, equal the joins, and contain reverse composites",
    },
    SuiteInfo {
        name: "lattice",
        support: &[rel(3, None), part(3, None)],
        summary: "sublattice generated by Mitsch, inclusion and reverse inclusion",
    },
    SuiteInfo {
        name: "partition-laws",
        support: &[part(3, None)],
        summary: "associativity, identity, star laws and canonical form on P_n",
    },
    SuiteInfo {
        name: "lemma-compat",
        support: &[part(3, None)],
        summary: "refinement is compatible with multiplication",
    },
    SuiteInfo {
        name: "lemma-dk",
        support: &[part(3, None)],
        summary: "d a d = d; k a k = k with a transversal; a k a = a without",
    },
    SuiteInfo {
        name: "cor-idempotents",
        support: &[part(3, None)],
        summary: "a d, d a, a k, k a are idempotent",
    },
    SuiteInfo {
        name: "prop-pda",
        support: &[part(3, Some(3))],
        summary: "a d a >= b d b criterion for the reverse-inclusion-then-Mitsch composite",
    },
    SuiteInfo {
        name: "prop-pka",
        support: &[part(3, Some(3))],
        summary: "a k a <= b k b criterion for the inclusion-then-Mitsch composite",
    },
    SuiteInfo {
        name: "canonical-subsemigroups",
        support: &[part(3, None)],
        summary: "Mitsch agrees with reverse refinement on block bijections, refinement on partial injections",
    },
    SuiteInfo {
        name: "mitsch-fast",
        support: &[part(3, Some(3))],
        summary: "idempotent-witness Mitsch test agrees with the definition",
    },
];

pub fn suite_info(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

fn plan(info: &SuiteInfo, cfg: &SuiteConfig) -> Result<SweepMode> {
    let support = info
        .support
        .iter()
        .find(|s| s.kind == cfg.kind)
        .ok_or_else(|| Error::UnsupportedSuite {
            suite: info.name.into(),
            kind: cfg.kind.to_string(),
            n: cfg.n,
        })?;
    let sampled_ok = support
        .sampled_max
        .is_some_and(|m| cfg.n <= m || cfg.force_large);
    if cfg.sample.is_some() && sampled_ok {
        Ok(SweepMode::Sampled)
    } else if cfg.n <= support.exhaustive_max {
        Ok(SweepMode::Exhaustive)
    } else if sampled_ok {
        Ok(SweepMode::Sampled)
    } else if cfg.force_large {
        Ok(SweepMode::Exhaustive)
    } else {
        let limit = support.sampled_max.unwrap_or(0).max(support.exhaustive_max);
        Err(Error::UniverseTooLarge {
            what: "suite universe",
            n: cfg.n,
            limit,
        })
    }
}

/// Runs a suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<CheckReport> {
    let info = suite_info(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let mode = plan(info, cfg)?;
    let start = Instant::now();
    let seed = (mode == SweepMode::Sampled).then_some(cfg.seed);
    let mut run = Run {
        cfg,
        mode,
        report: CheckReport::new(name, cfg.kind, cfg.n, mode, seed),
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
    };
    match cfg.kind {
        UniverseKind::Relations => {
            let table = UniverseTable::<Relation>::new_unguarded(cfg.n);
            run.report.universe_size = Some(table.len());
            match name {
                "relation-laws" => relation_laws(&mut run, &table),
                "residuation" => residuation(&mut run, &table),
                "thm-equational-criterion" => equational_criterion(&mut run, &table),
                "mitsch-partial-order" => relation_partial_order(&mut run, &table),
                "subsemigroup-ix" => subsemigroup_ix(&mut run, &table),
                "prop-fa" => prop_fa(&mut run, &table),
                "prop-meet-witness" => prop_meet_witness(&mut run, &table)?,
                "prop-incl-then-le" => prop_incl_then_le(&mut run, &table)?,
                "prop-rincl-then-le" => prop_rincl_then_le(&mut run, &table)?,
                "atoms" => atoms(&mut run, &table),
                "join-closure" => join_closure(&mut run, &table)?,
                "lattice" => lattice(&mut run, &table)?,
                _ => unreachable!("guarded by plan"),
            }
        }
        UniverseKind::Partitions => {
            let table = UniverseTable::<Partition>::new_unguarded(cfg.n);
            run.report.universe_size = Some(table.len());
            match name {
                "mitsch-partial-order" => partition_partial_order(&mut run, &table),
                "join-closure" => join_closure(&mut run, &table)?,
                "lattice" => lattice(&mut run, &table)?,
                "partition-laws" => partition_laws(&mut run, &table),
                "lemma-compat" => lemma_compat(&mut run, &table),
                "lemma-dk" => lemma_dk(&mut run, &table),
                "cor-idempotents" => cor_idempotents(&mut run, &table),
                "prop-pda" => prop_partition_composite(&mut run, &table, Composite::Pda),
                "prop-pka" => prop_partition_composite(&mut run, &table, Composite::Pka),
                "canonical-subsemigroups" => canonical_subsemigroups(&mut run, &table),
                "mitsch-fast" => mitsch_fast(&mut run, &table),
                _ => unreachable!("guarded by plan"),
            }
        }
    }
    run.report.wall_time = start.elapsed();
    Ok(run.report)
}

struct Run<'a> {
    cfg: &'a SuiteConfig,
    mode: SweepMode,
    report: CheckReport,
    rng: ChaCha8Rng,
}

impl Run<'_> {
    /// Index tuples over a universe of size `m`: all of them, or a seeded sample.
    fn tuples<const K: usize>(&mut self, m: usize) -> Tuples<K> {
        match self.mode {
            SweepMode::Exhaustive => Tuples { m, listed: None },
            SweepMode::Sampled => {
                let count = self.cfg.sample.unwrap_or(DEFAULT_SAMPLE);
                let listed = (0..count)
                    .map(|_| std::array::from_fn(|_| self.rng.random_range(0..m)))
                    .collect();
                Tuples {
                    m,
                    listed: Some(listed),
                }
            }
        }
    }

    fn push(&mut self, claim: ClaimResult) {
        self.report.push(claim);
    }

    fn observe(&mut self, note: impl Into<String>) {
        self.report.observe(note);
    }
}

struct Tuples<const K: usize> {
    m: usize,
    listed: Option<Vec<[usize; K]>>,
}

impl<const K: usize> Tuples<K> {
    fn len(&self) -> usize {
        match &self.listed {
            Some(v) => v.len(),
            None => self.m.pow(K as u32),
        }
    }

    fn get(&self, mut k: usize) -> [usize; K] {
        match &self.listed {
            Some(v) => v[k],
            None => {
                let mut out = [0; K];
                for slot in out.iter_mut().rev() {
                    *slot = k % self.m;
                    k /= self.m;
                }
                out
            }
        }
    }
}

fn enc_pair<E: Element>(table: &UniverseTable<E>, i: usize, j: usize) -> String {
    format!("({}, {})", table.get(i).encode(), table.get(j).encode())
}

fn enc_triple<E: Element>(table: &UniverseTable<E>, [i, j, k]: [usize; 3]) -> String {
    format!(
        "({}, {}, {})",
        table.get(i).encode(),
        table.get(j).encode(),
        table.get(k).encode()
    )
}

fn matrix_claim(
    claim: &str,
    expected: &PreorderMatrix,
    actual: &PreorderMatrix,
    describe: impl Fn(usize, usize) -> String + Sync,
) -> ClaimResult {
    let m = expected.universe().size;
    ClaimResult::sweep(claim, m * m, |k| {
        let (i, j) = (k / m, k % m);
        (expected.get(i, j) != actual.get(i, j)).then(|| {
            format!(
                "{} expected {} got {}",
                describe(i, j),
                expected.get(i, j),
                actual.get(i, j)
            )
        })
    })
}

// ---------------------------------------------------------------------------
// B_n

fn relation_laws(run: &mut Run, t: &UniverseTable<Relation>) {
    let m = t.len();
    let triples = run.tuples::<3>(m);
    run.push(ClaimResult::sweep("associativity", triples.len(), |k| {
        let [i, j, l] = triples.get(k);
        let (a, b, c) = (t.get(i), t.get(j), t.get(l));
        (&(a * b) * c != a * &(b * c)).then(|| enc_triple(t, [i, j, l]))
    }));
    let pairs = run.tuples::<2>(m);
    run.push(ClaimResult::sweep(
        "converse-antidistributes",
        pairs.len(),
        |k| {
            let [i, j] = pairs.get(k);
            let (a, b) = (t.get(i), t.get(j));
            ((a * b).converse() != &b.converse() * &a.converse()).then(|| enc_pair(t, i, j))
        },
    ));
    run.push(ClaimResult::sweep("de-morgan", pairs.len(), |k| {
        let [i, j] = pairs.get(k);
        let (a, b) = (t.get(i), t.get(j));
        let u =
            a.union(b).unwrap().complement() == a.complement().intersect(&b.complement()).unwrap();
        let v =
            a.intersect(b).unwrap().complement() == a.complement().union(&b.complement()).unwrap();
        (!(u && v)).then(|| enc_pair(t, i, j))
    }));
    run.push(ClaimResult::sweep("involutions", m, |i| {
        let a = t.get(i);
        (a.converse().converse() != *a || a.complement().complement() != *a).then(|| a.encode())
    }));
}

fn residuation(run: &mut Run, t: &UniverseTable<Relation>) {
    let m = t.len();
    let triples = run.tuples::<3>(m);
    // (a, b, xi)
    run.push(ClaimResult::sweep("theorem-k", triples.len(), |k| {
        let [ia, ib, ix] = triples.get(k);
        let (a, b, x) = (t.get(ia), t.get(ib), t.get(ix));
        let lhs = (b * x).is_subset_unchecked(a);
        let mid = x.is_subset_unchecked(&max_right_solution(b, a).unwrap());
        let rhs = b.is_subset_unchecked(&(&a.complement() * &x.converse()).complement());
        (!(lhs == mid && mid == rhs)).then(|| enc_triple(t, [ia, ib, ix]))
    }));
    run.push(ClaimResult::sweep("left-residual", triples.len(), |k| {
        let [ia, ib, ix] = triples.get(k);
        let (a, b, x) = (t.get(ia), t.get(ib), t.get(ix));
        let lhs = (x * b).is_subset_unchecked(a);
        let rhs = x.is_subset_unchecked(&max_left_solution(b, a).unwrap());
        (lhs != rhs).then(|| enc_triple(t, [ia, ib, ix]))
    }));
    run.push(ClaimResult::sweep(
        "solutions-below-residual",
        triples.len(),
        |k| {
            let [ia, ib, ix] = triples.get(k);
            let (a, b, x) = (t.get(ia), t.get(ib), t.get(ix));
            let right_bad =
                &(b * x) == a && !x.is_subset_unchecked(&max_right_solution(b, a).unwrap());
            let left_bad =
                &(x * b) == a && !x.is_subset_unchecked(&max_left_solution(b, a).unwrap());
            (right_bad || left_bad).then(|| enc_triple(t, [ia, ib, ix]))
        },
    ));

    // Divisibility against a full scan of B_n, pair by pair.
    let pairs = run.tuples::<2>(m);
    let all = t.elements();
    run.push(ClaimResult::sweep(
        "divisibility-vs-search",
        pairs.len(),
        |k| {
            let [ia, ib] = pairs.get(k);
            let (a, b) = (t.get(ia), t.get(ib));
            let right = all.iter().any(|x| &(b * x) == a);
            let left = all.iter().any(|x| &(x * b) == a);
            (divides_right(b, a).unwrap() != right || divides_left(b, a).unwrap() != left)
                .then(|| enc_pair(t, ia, ib))
        },
    ));
    run.push(ClaimResult::sweep("greatest-solution", pairs.len(), |k| {
        let [ia, ib] = pairs.get(k);
        let (a, b) = (t.get(ia), t.get(ib));
        let r = max_right_solution(b, a).unwrap();
        let l = max_left_solution(b, a).unwrap();
        let right_ok = !divides_right(b, a).unwrap()
            || all
                .iter()
                .filter(|&x| &(b * x) == a)
                .all(|x| x.is_subset_unchecked(&r));
        let left_ok = !divides_left(b, a).unwrap()
            || all
                .iter()
                .filter(|&x| &(x * b) == a)
                .all(|x| x.is_subset_unchecked(&l));
        (!(right_ok && left_ok)).then(|| enc_pair(t, ia, ib))
    }));
    run.push(ClaimResult::sweep("left-right-duality", pairs.len(), |k| {
        let [ia, ib] = pairs.get(k);
        let (a, b) = (t.get(ia), t.get(ib));
        let l = max_left_solution(b, a).unwrap();
        let dual = max_right_solution(&b.converse(), &a.converse())
            .unwrap()
            .converse();
        (l != dual).then(|| enc_pair(t, ia, ib))
    }));
}

fn equational_criterion(run: &mut Run, t: &UniverseTable<Relation>) {
    let pairs = run.tuples::<2>(t.len());
    run.push(ClaimResult::sweep(
        "criterion-equals-definition",
        pairs.len(),
        |k| {
            let [i, j] = pairs.get(k);
            let (a, b) = t.pair((i, j));
            let fast = mitsch_le(a, b).unwrap();
            let oracle = mitsch_le_oracle_unguarded(a, b);
            (fast != oracle).then(|| format!("{} fast={fast} oracle={oracle}", enc_pair(t, i, j)))
        },
    ));
}

fn relation_partial_order(run: &mut Run, t: &UniverseTable<Relation>) {
    let m = t.len();
    match run.mode {
        SweepMode::Exhaustive => {
            // Definitional relation over the whole universe.
            let le = t.materialise_index_fn("mitsch", |i, j| t.mitsch_definitional(i, j));
            partial_order_claims(run, &le, |i, j| enc_pair(t, i, j));
        }
        SweepMode::Sampled => {
            // Equational criterion over the whole universe, plus a sampled
            // antisymmetry check against the definition.
            let le = t.materialise(NamedOrder::Mitsch);
            run.push(ClaimResult::sweep("reflexive", m, |i| {
                (!le.get(i, i)).then(|| t.get(i).encode())
            }));
            run.push(ClaimResult::sweep("antisymmetric", m * m, |k| {
                let (i, j) = (k / m, k % m);
                (i != j && le.get(i, j) && le.get(j, i)).then(|| enc_pair(t, i, j))
            }));
            let square = compose_preorders(&le, &le).expect("same universe");
            run.push(ClaimResult::sweep("transitive", m * m, |k| {
                let (i, l) = (k / m, k % m);
                (square.get(i, l) && !le.get(i, l)).then(|| enc_pair(t, i, l))
            }));
            let pairs = run.tuples::<2>(m);
            run.push(ClaimResult::sweep(
                "antisymmetric-by-definition",
                pairs.len(),
                |k| {
                    let [i, j] = pairs.get(k);
                    let (a, b) = t.pair((i, j));
                    (i != j && mitsch_le_oracle_unguarded(a, b) && mitsch_le_oracle_unguarded(b, a))
                        .then(|| enc_pair(t, i, j))
                },
            ));
        }
    }
}

fn partial_order_claims(
    run: &mut Run,
    le: &PreorderMatrix,
    describe: impl Fn(usize, usize) -> String + Sync,
) {
    let m = le.universe().size;
    run.push(ClaimResult::sweep("reflexive", m, |i| {
        (!le.get(i, i)).then(|| describe(i, i))
    }));
    run.push(ClaimResult::sweep("antisymmetric", m * m, |k| {
        let (i, j) = (k / m, k % m);
        (i != j && le.get(i, j) && le.get(j, i)).then(|| describe(i, j))
    }));
    run.push(ClaimResult::sweep("transitive", m * m * m, |k| {
        let (i, j, l) = (k / (m * m), (k / m) % m, k % m);
        (le.get(i, j) && le.get(j, l) && !le.get(i, l))
            .then(|| format!("{} -> {}", describe(i, j), describe(j, l)))
    }));
}

fn subsemigroup_ix(run: &mut Run, t: &UniverseTable<Relation>) {
    let pinj: Vec<usize> = (0..t.len())
        .filter(|&i| t.get(i).is_partial_injection())
        .collect();
    let carrier: Vec<Relation> = pinj.iter().map(|&i| t.get(i).clone()).collect();
    let p = pinj.len();
    run.observe(format!("I_{} has {} elements", t.n(), p));
    run.push(ClaimResult::sweep("regular-subsemigroup", p * p, |k| {
        let (a, b) = (&carrier[k / p], &carrier[k % p]);
        let closed = (a * b).is_partial_injection();
        let regular = &(a * &a.converse()) * a == *a;
        (!(closed && regular)).then(|| format!("({}, {})", a.encode(), b.encode()))
    }));
    run.push(ClaimResult::sweep("restriction-coherence", p * p, |k| {
        let (a, b) = (&carrier[k / p], &carrier[k % p]);
        let inside = mitsch_le_within(a, b, &carrier).unwrap();
        (inside != mitsch_le(a, b).unwrap()).then(|| format!("({}, {})", a.encode(), b.encode()))
    }));
    run.push(ClaimResult::sweep("le-iff-subset-on-ix", p * p, |k| {
        let (a, b) = (&carrier[k / p], &carrier[k % p]);
        (mitsch_le(a, b).unwrap() != a.is_subset_unchecked(b))
            .then(|| format!("({}, {})", a.encode(), b.encode()))
    }));
    let m = t.len();
    run.push(ClaimResult::sweep("subset-of-ix-implies-le", m * p, |k| {
        let (a, b) = (t.get(k / p), &carrier[k % p]);
        (a.is_subset_unchecked(b) && !mitsch_le(a, b).unwrap())
            .then(|| format!("({}, {})", a.encode(), b.encode()))
    }));
}

fn prop_fa(run: &mut Run, t: &UniverseTable<Relation>) {
    let m = t.len();
    let preorders: Vec<&Relation> = t.elements().iter().filter(|a| a.is_preorder()).collect();
    let p = preorders.len();
    run.observe(format!("{p} preorders on {} points", t.n()));
    run.push(ClaimResult::sweep("alpha-le-every-member", p * m, |k| {
        let (alpha, beta) = (preorders[k / m], t.get(k % m));
        (in_f(alpha, beta).unwrap() && !mitsch_le(alpha, beta).unwrap())
            .then(|| format!("({}, {})", alpha.encode(), beta.encode()))
    }));
    run.push(ClaimResult::sweep("le-iff-reverse-inclusion", p * m, |k| {
        let (alpha, beta) = (preorders[k / m], t.get(k % m));
        (in_f(alpha, beta).unwrap()
            && mitsch_le(alpha, beta).unwrap() != beta.is_subset_unchecked(alpha))
        .then(|| format!("({}, {})", alpha.encode(), beta.encode()))
    }));
    let members: Vec<usize> = preorders
        .iter()
        .map(|alpha| (0..m).filter(|&j| in_f(alpha, t.get(j)).unwrap()).count())
        .collect();
    run.observe(format!(
        "|F(alpha)| ranges over {}..={}",
        members.iter().min().unwrap_or(&0),
        members.iter().max().unwrap_or(&0)
    ));
}

fn prop_meet_witness(run: &mut Run, t: &UniverseTable<Relation>) -> Result<()> {
    let m = t.len();
    let id = Relation::identity(t.n());
    let outcomes: Vec<Result<Option<String>>> = {
        use rayon::prelude::*;
        (0..m * m)
            .into_par_iter()
            .map(|k| {
                let (a, b) = t.pair((k / m, k % m));
                let witness = meet_rev_witnesses(a, b)?;
                let meet = meet_with_reverse_inclusion(a, b)?;
                let bad = match &witness {
                    None => meet,
                    Some(w) => {
                        !meet
                            || !w.witnesses(a, b)
                            || !w.epsilon().is_idempotent()
                            || !w.phi().is_idempotent()
                            || !id.is_subset_unchecked(w.epsilon())
                    }
                };
                Ok(bad.then(|| enc_pair(t, k / m, k % m)))
            })
            .collect()
    };
    let mut failures = Vec::new();
    for o in outcomes {
        if let Some(f) = o? {
            failures.push(f);
        }
    }
    run.push(ClaimResult::from_failures(
        "meet-yields-residual-witnesses",
        (m * m) as u64,
        failures,
    ));

    // Converse: any idempotent witnesses with ι ⊆ ε place (b ε, b) in the meet.
    let idem: Vec<&Relation> = t.idempotents().iter().map(|&i| t.get(i)).collect();
    let reflexive: Vec<&Relation> = idem
        .iter()
        .copied()
        .filter(|e| id.is_subset_unchecked(e))
        .collect();
    let (r, q) = (reflexive.len(), idem.len());
    run.observe(format!("{q} idempotents, {r} of them reflexive"));
    run.push(ClaimResult::sweep("witnesses-imply-meet", r * q * m, |k| {
        let (eps, phi, b) = (reflexive[k / (q * m)], idem[(k / m) % q], t.get(k % m));
        let a = b * eps;
        (phi * b == a && !meet_with_reverse_inclusion(&a, b).unwrap())
            .then(|| format!("eps={} phi={} b={}", eps.encode(), phi.encode(), b.encode()))
    }));
    Ok(())
}

/// The four matrices the composite suites share.
struct Basics {
    le: PreorderMatrix,
    incl: PreorderMatrix,
    rincl: PreorderMatrix,
}

fn basics<E: Element>(t: &UniverseTable<E>) -> Basics {
    Basics {
        le: t.materialise(NamedOrder::Mitsch),
        incl: t.materialise(NamedOrder::Incl),
        rincl: t.materialise(NamedOrder::Rincl),
    }
}

fn prop_incl_then_le(run: &mut Run, t: &UniverseTable<Relation>) -> Result<()> {
    let m = t.len();
    let b = basics(t);
    let pairs = run.tuples::<2>(m);
    run.push(ClaimResult::sweep(
        "criterion-vs-gamma-search",
        pairs.len(),
        |k| {
            let [i, j] = pairs.get(k);
            let (a, bb) = t.pair((i, j));
            let criterion = comp_subset_then_le(a, bb).unwrap();
            let search = (0..m).any(|g| b.incl.get(i, g) && b.le.get(g, j));
            (criterion != search).then(|| {
                format!(
                    "{} criterion={criterion} search={search}",
                    enc_pair(t, i, j)
                )
            })
        },
    ));
    if run.mode == SweepMode::Sampled {
        return Ok(());
    }
    let criterion = t.materialise(NamedOrder::InclThenMitsch);
    let composite = compose_preorders(&b.incl, &b.le)?;
    run.push(matrix_claim(
        "criterion-equals-composite",
        &composite,
        &criterion,
        |i, j| enc_pair(t, i, j),
    ));
    run.push(ClaimResult::single(
        "composite-is-preorder",
        criterion.is_preorder(),
        || "incl_then_mitsch is not a preorder".into(),
    ));
    let reverse = compose_preorders(&b.le, &b.incl)?;
    run.push(ClaimResult::single(
        "reverse-composite-contained",
        reverse.is_contained_in(&criterion)?,
        || "mitsch;incl not contained in incl_then_mitsch".into(),
    ));
    if t.n() < 2 {
        run.observe("containment is not proper below two points");
        return Ok(());
    }
    let witness = find_separating_witness(&reverse, &criterion)?;
    run.push(ClaimResult::single(
        "reverse-composite-proper",
        witness.is_some(),
        || "mitsch;incl equals incl_then_mitsch".into(),
    ));
    if let Some((i, j)) = witness {
        run.observe(format!(
            "least pair in incl_then_mitsch but not mitsch;incl: {}",
            enc_pair(t, i, j)
        ));
    }
    let perm_witness = find_separating_witness_where(&reverse, &criterion, |i, j| {
        t.get(i).is_permutation() && t.get(j).is_permutation()
    })?;
    run.push(ClaimResult::single(
        "permutation-witness-found",
        perm_witness.is_some_and(|(i, j)| i != j),
        || "no pair of permutations separates the composites".into(),
    ));
    if let Some((i, j)) = perm_witness {
        run.observe(format!(
            "least permutation pair separating the composites: {}",
            enc_pair(t, i, j)
        ));
    }
    let perms: Vec<usize> = (0..m).filter(|&i| t.get(i).is_permutation()).collect();
    let p = perms.len();
    run.push(ClaimResult::sweep(
        "distinct-permutations-separate",
        p * p,
        |k| {
            let (i, j) = (perms[k / p], perms[k % p]);
            (i != j && (!criterion.get(i, j) || reverse.get(i, j))).then(|| enc_pair(t, i, j))
        },
    ));
    run.push(ClaimResult::single(
        "reverse-composite-not-transitive",
        !reverse.is_preorder(),
        || "mitsch;incl is a preorder".into(),
    ));
    Ok(())
}

fn prop_rincl_then_le(run: &mut Run, t: &UniverseTable<Relation>) -> Result<()> {
    let b = basics(t);
    let criterion = t.materialise(NamedOrder::RinclThenMitsch);
    run.push(ClaimResult::single(
        "criterion-universal",
        criterion.is_all(),
        || "rincl_then_mitsch is not universal".into(),
    ));
    let composite = compose_preorders(&b.rincl, &b.le)?;
    run.push(matrix_claim(
        "raw-composite-universal",
        &criterion,
        &composite,
        |i, j| enc_pair(t, i, j),
    ));
    let join = closure_join(&b.rincl, &b.le)?;
    run.push(ClaimResult::single("join-universal", join.is_all(), || {
        "join is not universal".into()
    }));
    let reverse = compose_preorders(&b.le, &b.rincl)?;
    if t.n() < 2 {
        run.observe("containment is not proper below two points");
        return Ok(());
    }
    let witness = find_separating_witness(&reverse, &criterion)?;
    run.push(ClaimResult::single(
        "reverse-composite-proper",
        witness.is_some(),
        || "mitsch;rincl is universal".into(),
    ));
    if let Some((i, j)) = witness {
        run.observe(format!(
            "least pair outside mitsch;rincl: {}",
            enc_pair(t, i, j)
        ));
    }
    let iota = t.index_of(&Relation::identity(t.n())).expect("in universe");
    let omega = t
        .index_of(&Relation::universal(t.n()))
        .expect("in universe");
    run.push(ClaimResult::single(
        "identity-universal-separates",
        !reverse.get(iota, omega),
        || "identity (mitsch;rincl) universal holds".into(),
    ));
    run.push(ClaimResult::single(
        "reverse-composite-not-transitive",
        !reverse.is_preorder(),
        || "mitsch;rincl is a preorder".into(),
    ));
    Ok(())
}

fn atoms(run: &mut Run, t: &UniverseTable<Relation>) {
    let m = t.len();
    let le = t.materialise(NamedOrder::Mitsch);
    let empty = t.index_of(&Relation::empty(t.n())).expect("in universe");
    let singles: Vec<usize> = (0..m).filter(|&i| t.get(i).len() == 1).collect();
    let s = singles.len();
    run.push(ClaimResult::sweep(
        "inclusion-atoms-are-mitsch-atoms",
        s * m,
        |k| {
            let (atom, g) = (singles[k / m], k % m);
            (le.get(g, atom) && g != atom && g != empty).then(|| enc_pair(t, g, atom))
        },
    ));
    let perms: Vec<usize> = (0..m).filter(|&i| t.get(i).is_permutation()).collect();
    let p = perms.len();
    run.push(ClaimResult::sweep(
        "permutations-mitsch-maximal",
        p * m,
        |k| {
            let (pi, b) = (perms[k / m], k % m);
            (pi != b && le.get(pi, b)).then(|| enc_pair(t, pi, b))
        },
    ));

    // Interval claim: reported, not asserted.
    let mitsch_atoms: Vec<usize> = (0..m)
        .filter(|&a| a != empty && le.get(empty, a))
        .filter(|&a| (0..m).all(|g| !le.get(g, a) || g == a || g == empty))
        .collect();
    let nonempty: Vec<usize> = (0..m).filter(|&a| a != empty).collect();
    let outside: Vec<usize> = nonempty
        .iter()
        .copied()
        .filter(|&a| {
            let lower = mitsch_atoms
                .iter()
                .any(|&s| t.get(s).is_subset_unchecked(t.get(a)));
            let upper = mitsch_atoms
                .iter()
                .any(|&u| t.get(a).is_subset_unchecked(t.get(u)));
            !(lower && upper)
        })
        .collect();
    run.observe(format!("{} Mitsch atoms", mitsch_atoms.len()));
    run.observe(format!(
        "inclusion interval between Mitsch atoms: {} of {} nonempty relations",
        nonempty.len() - outside.len(),
        nonempty.len()
    ));
    for &a in outside.iter().take(8) {
        run.observe(format!("no enclosing atom interval: {}", t.get(a).encode()));
    }
}

// ---------------------------------------------------------------------------
// Shared by B_n and P_n

fn join_closure<E: Element>(run: &mut Run, t: &UniverseTable<E>) -> Result<()> {
    let b = basics(t);
    let describe = |i, j| enc_pair(t, i, j);
    for (name, inclusion, order) in [
        ("incl", &b.incl, NamedOrder::InclThenMitsch),
        ("rincl", &b.rincl, NamedOrder::RinclThenMitsch),
    ] {
        let criterion = t.materialise(order);
        let composite = compose_preorders(inclusion, &b.le)?;
        run.push(matrix_claim(
            &format!("{name}-criterion-equals-composite"),
            &composite,
            &criterion,
            describe,
        ));
        let join = closure_join(inclusion, &b.le)?;
        run.push(matrix_claim(
            &format!("{name}-join-equals-composite"),
            &composite,
            &join,
            describe,
        ));
        run.push(ClaimResult::single(
            format!("{name}-composite-is-preorder"),
            criterion.is_preorder(),
            || format!("{} is not a preorder", order.name()),
        ));
        let reverse = compose_preorders(&b.le, inclusion)?;
        run.push(ClaimResult::single(
            format!("{name}-reverse-composite-contained"),
            reverse.is_contained_in(&criterion)?,
            || format!("mitsch;{name} escapes {}", order.name()),
        ));
        run.observe(format!(
            "{}: {} pairs, mitsch;{name}: {} pairs",
            order.name(),
            criterion.count(),
            reverse.count()
        ));
    }
    Ok(())
}

fn lattice<E: Element>(run: &mut Run, t: &UniverseTable<E>) -> Result<()> {
    let lattice = standard_sublattice(t)?;
    run.observe(format!(
        "{} nodes, {} covering edges",
        lattice.nodes.len(),
        lattice.edges.len()
    ));
    for node in &lattice.nodes {
        run.observe(format!(
            "node {}{}: {} pairs, {}",
            node.label,
            if node.aliases.is_empty() {
                String::new()
            } else {
                format!(" (= {})", node.aliases.join(", "))
            },
            node.matrix.count(),
            if node.is_order { "order" } else { "preorder" }
        ));
    }
    run.push(ClaimResult::single(
        "closed-under-meet-and-join",
        lattice.is_closed()?,
        || "sublattice is not closed".into(),
    ));
    run.push(ClaimResult::sweep(
        "contains-named",
        NamedOrder::ALL.len(),
        |k| {
            let o = NamedOrder::ALL[k];
            lattice
                .node(o.name())
                .is_none()
                .then(|| o.name().to_string())
        },
    ));
    // The composites only fail antisymmetry once there are two points.
    let degenerate = t.n() < 2;
    run.push(ClaimResult::sweep(
        "order-flags",
        NamedOrder::ALL.len(),
        |k| {
            let o = NamedOrder::ALL[k];
            let node = lattice.node(o.name())?;
            let wrong = if o.is_order() {
                !node.is_order
            } else {
                node.is_order && !degenerate
            };
            wrong.then(|| format!("{} is_order={}", o.name(), node.is_order))
        },
    ));
    let bottom = lattice.node("eq").expect("eq is always generated");
    run.push(ClaimResult::sweep(
        "eq-is-bottom",
        lattice.nodes.len(),
        |k| {
            let node = &lattice.nodes[k];
            (!bottom.matrix.is_contained_in(&node.matrix).unwrap()).then(|| node.label.clone())
        },
    ));

    let catalogue = t.catalogue();
    let named = |o: NamedOrder| &catalogue[o as usize];
    let conj = intersect_preorders(
        named(NamedOrder::MitschAndIncl),
        named(NamedOrder::MitschAndRincl),
    )?;
    run.push(ClaimResult::single(
        "double-conjunction-trivial",
        conj.is_identity(),
        || format!("{} pairs", conj.count()),
    ));
    if t.n() >= 2 {
        run.push(ClaimResult::single(
            "meets-nontrivial",
            !named(NamedOrder::MitschAndIncl).is_identity()
                && !named(NamedOrder::MitschAndRincl).is_identity(),
            || "a meet with inclusion is equality".into(),
        ));
        let top = lattice.nodes.iter().find(|n| {
            lattice
                .nodes
                .iter()
                .all(|o| o.matrix.is_contained_in(&n.matrix).unwrap())
        });
        match E::KIND {
            UniverseKind::Relations => {
                run.push(ClaimResult::single(
                    "rincl-composite-is-top",
                    top.is_some_and(|n| {
                        n.label == NamedOrder::RinclThenMitsch.name() && n.matrix.is_all()
                    }),
                    || format!("top is {:?}", top.map(|n| &n.label)),
                ));
            }
            UniverseKind::Partitions => {
                run.push(ClaimResult::single(
                    "composites-proper",
                    !named(NamedOrder::InclThenMitsch).is_all()
                        && !named(NamedOrder::RinclThenMitsch).is_all(),
                    || "a composite is universal".into(),
                ));
            }
        }
    }
    let dot = lattice.to_dot();
    let again = standard_sublattice(t)?.to_dot();
    run.push(ClaimResult::single(
        "dot-deterministic",
        dot == again,
        || "DOT output differs between runs".into(),
    ));
    Ok(())
}

// ---------------------------------------------------------------------------
// P_n

fn partition_partial_order(run: &mut Run, t: &UniverseTable<Partition>) {
    let le = t.materialise(NamedOrder::Mitsch);
    partial_order_claims(run, &le, |i, j| enc_pair(t, i, j));
}

fn partition_laws(run: &mut Run, t: &UniverseTable<Partition>) {
    let m = t.len();
    let id = t
        .index_of(&Partition::identity(t.n()))
        .expect("in universe");
    run.push(ClaimResult::sweep("products-canonical", m * m, |k| {
        let (a, b) = t.pair((k / m, k % m));
        let p = a.compose_unchecked(b);
        let raw: Vec<usize> = p.labels().iter().map(|&l| l as usize).collect();
        (Partition::from_labels(p.n(), &raw).unwrap() != p).then(|| enc_pair(t, k / m, k % m))
    }));
    run.push(ClaimResult::sweep("associativity", m * m * m, |k| {
        let (i, j, l) = (k / (m * m), (k / m) % m, k % m);
        let left = t.product_index(t.product_index(i, j), l);
        let right = t.product_index(i, t.product_index(j, l));
        (left != right).then(|| enc_triple(t, [i, j, l]))
    }));
    run.push(ClaimResult::sweep("identity", m, |i| {
        (t.product_index(id, i) != i || t.product_index(i, id) != i).then(|| t.get(i).to_string())
    }));
    run.push(ClaimResult::sweep(
        "star-involution-and-regularity",
        m,
        |i| {
            let a = t.get(i);
            let s = a.star();
            let ok = s.star() == *a
                && a.compose_unchecked(&s).compose_unchecked(a) == *a
                && s.compose_unchecked(a).compose_unchecked(&s) == s;
            (!ok).then(|| a.to_string())
        },
    ));
    run.push(ClaimResult::sweep("star-antihomomorphism", m * m, |k| {
        let (a, b) = t.pair((k / m, k % m));
        (a.compose_unchecked(b).star() != b.star().compose_unchecked(&a.star()))
            .then(|| enc_pair(t, k / m, k % m))
    }));
    run.push(ClaimResult::sweep("render-parse-roundtrip", m, |i| {
        let a = t.get(i);
        (a.to_string().parse::<Partition>().ok().as_ref() != Some(a)).then(|| a.to_string())
    }));
}

fn lemma_compat(run: &mut Run, t: &UniverseTable<Partition>) {
    let m = t.len();
    let incl = t.materialise(NamedOrder::Incl);
    let pairs: Vec<(usize, usize)> = incl.pairs().collect();
    let p = pairs.len();
    run.observe(format!("{p} refinement pairs"));
    run.push(ClaimResult::sweep("right-compatible", p * m, |k| {
        let ((a, b), c) = (pairs[k / m], k % m);
        (!incl.get(t.product_index(a, c), t.product_index(b, c))).then(|| enc_triple(t, [a, b, c]))
    }));
    run.push(ClaimResult::sweep("left-compatible", p * m, |k| {
        let ((a, b), c) = (pairs[k / m], k % m);
        (!incl.get(t.product_index(c, a), t.product_index(c, b))).then(|| enc_triple(t, [a, b, c]))
    }));
}

fn lemma_dk(run: &mut Run, t: &UniverseTable<Partition>) {
    let m = t.len();
    let d = t
        .index_of(&Partition::trivial_d(t.n()))
        .expect("in universe");
    let k_ = t
        .index_of(&Partition::universal_k(t.n()))
        .expect("in universe");
    let sandwich =
        |outer: usize, inner: usize| t.product_index(t.product_index(outer, inner), outer);
    run.push(ClaimResult::sweep("d-a-d-is-d", m, |a| {
        (t.product_index(t.product_index(d, a), d) != d).then(|| t.get(a).to_string())
    }));
    run.push(ClaimResult::sweep("transversal-k-a-k-is-k", m, |a| {
        (t.get(a).has_transversal() && t.product_index(t.product_index(k_, a), k_) != k_)
            .then(|| t.get(a).to_string())
    }));
    run.push(ClaimResult::sweep("no-transversal-a-k-a-is-a", m, |a| {
        (!t.get(a).has_transversal() && sandwich(a, k_) != a).then(|| t.get(a).to_string())
    }));
}

fn cor_idempotents(run: &mut Run, t: &UniverseTable<Partition>) {
    let m = t.len();
    let d = t
        .index_of(&Partition::trivial_d(t.n()))
        .expect("in universe");
    let k_ = t
        .index_of(&Partition::universal_k(t.n()))
        .expect("in universe");
    let idempotent = |e: usize| t.product_index(e, e) == e;
    for (name, c, left) in [
        ("a-d", d, false),
        ("d-a", d, true),
        ("a-k", k_, false),
        ("k-a", k_, true),
    ] {
        run.push(ClaimResult::sweep(format!("{name}-idempotent"), m, |a| {
            let e = if left {
                t.product_index(c, a)
            } else {
                t.product_index(a, c)
            };
            (!idempotent(e)).then(|| t.get(a).to_string())
        }));
    }
}

#[derive(Clone, Copy)]
enum Composite {
    /// `a ⊇ c ≤ b`, criterion `a 𝐝 a ⊇ b 𝐝 b`.
    Pda,
    /// `a ⊆ c ≤ b`, criterion `a 𝐤 a ⊆ b 𝐤 b`.
    Pka,
}

fn prop_partition_composite(run: &mut Run, t: &UniverseTable<Partition>, which: Composite) {
    let m = t.len();
    let le = t.materialise(NamedOrder::Mitsch);
    let incl = t.materialise(NamedOrder::Incl);
    let (middle, name) = match which {
        Composite::Pda => (Partition::trivial_d(t.n()), "d"),
        Composite::Pka => (Partition::universal_k(t.n()), "k"),
    };
    let mid = t.index_of(&middle).expect("in universe");
    let sandwich = |a: usize| t.product_index(t.product_index(a, mid), a);
    run.push(ClaimResult::sweep(format!("b-{name}-b-below-b"), m, |b| {
        let s = sandwich(b);
        let inclusion_ok = match which {
            Composite::Pda => incl.get(s, b),
            Composite::Pka => incl.get(b, s),
        };
        (!(le.get(s, b) && inclusion_ok)).then(|| t.get(b).to_string())
    }));
    let pairs = run.tuples::<2>(m);
    run.push(ClaimResult::sweep(
        "criterion-vs-c-search",
        pairs.len(),
        |k| {
            let [i, j] = pairs.get(k);
            let (a, b) = t.pair((i, j));
            let (criterion, search) = match which {
                Composite::Pda => (
                    partition_orders::comp_supset_then_le(a, b).unwrap(),
                    (0..m).any(|c| incl.get(c, i) && le.get(c, j)),
                ),
                Composite::Pka => (
                    partition_orders::comp_subset_then_le(a, b).unwrap(),
                    (0..m).any(|c| incl.get(i, c) && le.get(c, j)),
                ),
            };
            (criterion != search).then(|| {
                format!(
                    "{} criterion={criterion} search={search}",
                    enc_pair(t, i, j)
                )
            })
        },
    ));
}

fn canonical_subsemigroups(run: &mut Run, t: &UniverseTable<Partition>) {
    let m = t.len();
    let le = t.materialise(NamedOrder::Mitsch);
    let incl = t.materialise(NamedOrder::Incl);
    let bij: Vec<usize> = (0..m).filter(|&i| t.get(i).is_block_bijection()).collect();
    let inj: Vec<usize> = (0..m)
        .filter(|&i| t.get(i).is_partial_injection_diagram())
        .collect();
    run.observe(format!(
        "{} block bijections, {} partial-injection diagrams",
        bij.len(),
        inj.len()
    ));
    for (name, set) in [("block-bijections", &bij), ("partial-injections", &inj)] {
        let members: HashSet<usize> = set.iter().copied().collect();
        let s = set.len();
        run.push(ClaimResult::sweep(format!("{name}-closed"), s * s, |k| {
            let (i, j) = (set[k / s], set[k % s]);
            (!members.contains(&t.product_index(i, j))).then(|| enc_pair(t, i, j))
        }));
    }
    let b = bij.len();
    run.push(ClaimResult::sweep(
        "le-iff-reverse-refinement-on-block-bijections",
        b * b,
        |k| {
            let (i, j) = (bij[k / b], bij[k % b]);
            (le.get(i, j) != incl.get(j, i)).then(|| enc_pair(t, i, j))
        },
    ));
    let p = inj.len();
    run.push(ClaimResult::sweep(
        "le-iff-refinement-on-partial-injections",
        p * p,
        |k| {
            let (i, j) = (inj[k / p], inj[k % p]);
            (le.get(i, j) != incl.get(i, j)).then(|| enc_pair(t, i, j))
        },
    ));
}

fn mitsch_fast(run: &mut Run, t: &UniverseTable<Partition>) {
    let le = t.materialise(NamedOrder::Mitsch);
    let idem = t.idempotent_elements();
    run.observe(format!("{} idempotents", idem.len()));
    let pairs = run.tuples::<2>(t.len());
    run.push(ClaimResult::sweep(
        "fast-equals-definition",
        pairs.len(),
        |k| {
            let [i, j] = pairs.get(k);
            let (a, b) = t.pair((i, j));
            let fast = partition_orders::mitsch_le_fast_with(a, b, &idem).unwrap();
            (fast != le.get(i, j))
                .then(|| format!("{} fast={fast} oracle={}", enc_pair(t, i, j), le.get(i, j)))
        },
    ));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_and_unsupported() {
        let cfg = SuiteConfig::new(UniverseKind::Relations, 2);
        assert!(matches!(
            run_suite("nope", &cfg),
            Err(Error::UnknownSuite(_))
        ));
        assert!(matches!(
            run_suite("lemma-dk", &cfg),
            Err(Error::UnsupportedSuite { .. })
        ));
        let big = SuiteConfig::new(UniverseKind::Relations, 4);
        assert!(matches!(
            run_suite("thm-equational-criterion", &big),
            Err(Error::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn planning() {
        let info = suite_info("thm-equational-criterion").unwrap();
        let cfg = SuiteConfig::new(UniverseKind::Relations, 2);
        assert_eq!(plan(info, &cfg).unwrap(), SweepMode::Exhaustive);
        let cfg = SuiteConfig::new(UniverseKind::Relations, 3);
        assert_eq!(plan(info, &cfg).unwrap(), SweepMode::Sampled);
        let cfg = SuiteConfig::new(UniverseKind::Relations, 2).sampled(10, 1);
        assert_eq!(plan(info, &cfg).unwrap(), SweepMode::Sampled);
        let info = suite_info("lemma-dk").unwrap();
        let cfg = SuiteConfig::new(UniverseKind::Partitions, 2).sampled(10, 1);
        assert_eq!(plan(info, &cfg).unwrap(), SweepMode::Exhaustive);
    }

    #[test]
    fn tuples_decode_row_major() {
        let t = Tuples::<3> { m: 4, listed: None };
        assert_eq!(t.len(), 64);
        assert_eq!(t.get(0), [0, 0, 0]);
        assert_eq!(t.get(1), [0, 0, 1]);
        assert_eq!(t.get(4 * 4 * 3 + 4 * 2 + 1), [3, 2, 1]);
    }

    #[test]
    fn every_suite_runs_at_small_n() {
        for info in SUITES {
            for s in info.support {
                for n in 0..=2usize.min(s.exhaustive_max) {
                    let cfg = SuiteConfig::new(s.kind, n);
                    let report = run_suite(info.name, &cfg).unwrap();
                    assert!(report.passed, "{report}");
                }
            }
        }
    }
}
