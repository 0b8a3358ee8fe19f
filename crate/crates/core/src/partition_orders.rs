//! Mitsch's order on `P_n` and the two composite preorders with refinement.
//!
//! No intrinsic criterion for Mitsch's order on partition diagrams is used
//! here. [`mitsch_le_oracle`] quantifies over the whole monoid;
//! [`mitsch_le_fast`] searches idempotent witnesses `a = e b = b f`, which
//! is sound for a regular monoid but is checked against the oracle before
//! being relied on.

use crate::error::{check_dims, Error, Result};
use crate::partition::{all_partitions, Partition};

pub const ORACLE_MAX_N: usize = 3;

fn guard(n: usize) -> Result<()> {
    if n > ORACLE_MAX_N {
        Err(Error::UniverseTooLarge {
            what: "partition oracle",
            n,
            limit: ORACLE_MAX_N,
        })
    } else {
        Ok(())
    }
}

/// `a = b`, or `a = a x = b x` for some `x` and `a = y b` for some `y`, with
/// `x`, `y` ranging over all of `P_n`.
pub fn mitsch_le_oracle(a: &Partition, b: &Partition) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    guard(a.n())?;
    mitsch_le_within(a, b, &all_partitions(a.n()))
}

/// The definitional test with witnesses drawn from `carrier`.
pub fn mitsch_le_within(a: &Partition, b: &Partition, carrier: &[Partition]) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    if a == b {
        return Ok(true);
    }
    let right = carrier
        .iter()
        .any(|x| b.compose_unchecked(x) == *a && a.compose_unchecked(x) == *a);
    Ok(right && carrier.iter().any(|y| y.compose_unchecked(b) == *a))
}

/// All idempotents of `P_n`.
pub fn idempotents(n: usize) -> Vec<Partition> {
    all_partitions(n)
        .into_iter()
        .filter(Partition::is_idempotent)
        .collect()
}

/// `a = b`, or `a = e b` and `a = b f` for idempotents `e`, `f`.
pub fn mitsch_le_fast(a: &Partition, b: &Partition) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    guard(a.n())?;
    mitsch_le_fast_with(a, b, &idempotents(a.n()))
}

/// [`mitsch_le_fast`] against a precomputed idempotent list.
pub fn mitsch_le_fast_with(
    a: &Partition,
    b: &Partition,
    idempotents: &[Partition],
) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    if a == b {
        return Ok(true);
    }
    Ok(idempotents.iter().any(|e| e.compose_unchecked(b) == *a)
        && idempotents.iter().any(|f| b.compose_unchecked(f) == *a))
}

fn sandwich(a: &Partition, middle: &Partition) -> Partition {
    a.compose_unchecked(middle).compose_unchecked(a)
}

/// `a (⊇∘≤) b`, decided as `a 𝐝 a ⊇ b 𝐝 b`.
pub fn comp_supset_then_le(a: &Partition, b: &Partition) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    let d = Partition::trivial_d(a.n());
    Ok(sandwich(b, &d).refines_unchecked(&sandwich(a, &d)))
}

/// `a (⊆∘≤) b`, decided as `a 𝐤 a ⊆ b 𝐤 b`.
pub fn comp_subset_then_le(a: &Partition, b: &Partition) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    let k = Partition::universal_k(a.n());
    Ok(sandwich(a, &k).refines_unchecked(&sandwich(b, &k)))
}
