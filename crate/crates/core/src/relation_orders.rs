//! Mitsch's natural partial order on `B_n` and the orders and preorders built
//! from it together with inclusion.
//!
//! [`mitsch_le`] is the equational test based on residuals; it needs a
//! constant number of compositions and runs in polynomial time in `n`.
//! [`mitsch_le_oracle`] evaluates the existential definition
//! `a = a x = b x = y b` by scanning the whole of `B_n`, and is only meant for
//! validating the former on small ground sets.

use crate::error::{check_dims, Error, Result};
use crate::relation::{all_relations, max_left_solution, max_right_solution, Relation};

/// Largest ground set on which the definitional oracle runs without an
/// explicit override.
pub const ORACLE_MAX_N: usize = 3;

/// `a ≤ b` in Mitsch's order, via `a = a r = b r = l b` with `r`, `l` the
/// greatest right and left residual solutions.
pub fn mitsch_le(a: &Relation, b: &Relation) -> Result<bool> {
    let r = max_right_solution(b, a)?;
    if a.compose_unchecked(&r) != *a || b.compose_unchecked(&r) != *a {
        return Ok(false);
    }
    let l = max_left_solution(b, a)?;
    Ok(l.compose_unchecked(b) == *a)
}

/// Definitional test of `a ≤ b`: `a = b`, or some `x` has `a = a x = b x`
/// and some `y` has `a = y b`. The two searches are independent, so each is
/// a single linear scan over `B_n`.
pub fn mitsch_le_oracle(a: &Relation, b: &Relation) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    if a.n() > ORACLE_MAX_N {
        return Err(Error::UniverseTooLarge {
            what: "relation oracle",
            n: a.n(),
            limit: ORACLE_MAX_N,
        });
    }
    Ok(mitsch_le_oracle_unguarded(a, b))
}

/// [`mitsch_le_oracle`] without the size guard. Ground sets above 4 points
/// cannot be enumerated at all.
pub fn mitsch_le_oracle_unguarded(a: &Relation, b: &Relation) -> bool {
    assert_eq!(a.n(), b.n());
    if a == b {
        return true;
    }
    let right = all_relations(a.n()).any(|x| right_witness(a, b, &x));
    right && all_relations(a.n()).any(|y| left_witness(a, b, &y))
}

/// The definitional test with `x` and `y` quantified over `carrier` only.
/// With `carrier` a subsemigroup this is Mitsch's order computed inside it.
pub fn mitsch_le_within(a: &Relation, b: &Relation, carrier: &[Relation]) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    if a == b {
        return Ok(true);
    }
    Ok(carrier.iter().any(|x| right_witness(a, b, x))
        && carrier.iter().any(|y| left_witness(a, b, y)))
}

fn right_witness(a: &Relation, b: &Relation, x: &Relation) -> bool {
    a.n() == x.n() && b.compose_unchecked(x) == *a && a.compose_unchecked(x) == *a
}

fn left_witness(a: &Relation, b: &Relation, y: &Relation) -> bool {
    a.n() == y.n() && y.compose_unchecked(b) == *a
}

/// `≤ ∩ ⊆`.
pub fn meet_with_inclusion(a: &Relation, b: &Relation) -> Result<bool> {
    Ok(a.is_subset(b)? && mitsch_le(a, b)?)
}

/// `≤ ∩ ⊇`.
pub fn meet_with_reverse_inclusion(a: &Relation, b: &Relation) -> Result<bool> {
    Ok(b.is_subset(a)? && mitsch_le(a, b)?)
}

/// Idempotents `ε`, `φ` with `ι ⊆ ε` witnessing `a = b ε = φ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetWitness {
    epsilon: Relation,
    phi: Relation,
}

impl MeetWitness {
    /// Checks `ε = ε²`, `φ = φ²` and `ι ⊆ ε`.
    pub fn new(epsilon: Relation, phi: Relation) -> Result<Self> {
        check_dims(epsilon.n(), phi.n())?;
        if !epsilon.is_idempotent() {
            return Err(Error::Precondition("epsilon is not idempotent".into()));
        }
        if !phi.is_idempotent() {
            return Err(Error::Precondition("phi is not idempotent".into()));
        }
        if !Relation::identity(epsilon.n()).is_subset_unchecked(&epsilon) {
            return Err(Error::Precondition("epsilon is not reflexive".into()));
        }
        Ok(MeetWitness { epsilon, phi })
    }

    pub fn epsilon(&self) -> &Relation {
        &self.epsilon
    }

    pub fn phi(&self) -> &Relation {
        &self.phi
    }

    /// Whether the witness realises `a = b ε = φ b`.
    pub fn witnesses(&self, a: &Relation, b: &Relation) -> bool {
        a.n() == self.epsilon.n()
            && b.n() == a.n()
            && b.compose_unchecked(&self.epsilon) == *a
            && self.phi.compose_unchecked(b) == *a
    }
}

/// When `a (≤ ∩ ⊇) b`, returns the `⊆`-greatest witnesses `ε = (b⁻¹ aᶜ)ᶜ`
/// and `φ = (aᶜ b⁻¹)ᶜ`.
pub fn meet_rev_witnesses(a: &Relation, b: &Relation) -> Result<Option<MeetWitness>> {
    if !meet_with_reverse_inclusion(a, b)? {
        return Ok(None);
    }
    let epsilon = max_right_solution(b, a)?;
    let phi = max_left_solution(b, a)?;
    let witness = MeetWitness::new(epsilon, phi)
        .map_err(|e| Error::Internal(format!("meet witness for {a:?}, {b:?}: {e}")))?;
    if !witness.witnesses(a, b) {
        return Err(Error::Internal(format!(
            "meet witness for {a:?}, {b:?} does not reproduce a"
        )));
    }
    Ok(Some(witness))
}

/// Membership of `beta` in `F(alpha) = { β : αβ = α = βα }` for a preorder `alpha`.
pub fn in_f(alpha: &Relation, beta: &Relation) -> Result<bool> {
    check_dims(alpha.n(), beta.n())?;
    if !alpha.is_preorder() {
        return Err(Error::Precondition(format!("{alpha:?} is not a preorder")));
    }
    Ok(alpha.compose_unchecked(beta) == *alpha && beta.compose_unchecked(alpha) == *alpha)
}

fn sandwich_universal(a: &Relation) -> Relation {
    let w = Relation::universal(a.n());
    a.compose_unchecked(&w).compose_unchecked(a)
}

/// `a (⊆∘≤) b`, i.e. `a ⊆ γ ≤ b` for some `γ`; decided as `a ω a ⊆ b ω b`.
pub fn comp_subset_then_le(a: &Relation, b: &Relation) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    Ok(sandwich_universal(a).is_subset_unchecked(&sandwich_universal(b)))
}

/// `a (⊇∘≤) b`. Every pair is related through `a ⊇ ∅ ≤ b`.
pub fn comp_supset_then_le(a: &Relation, b: &Relation) -> Result<bool> {
    check_dims(a.n(), b.n())?;
    Ok(true)
}
