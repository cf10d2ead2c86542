//! Plethysm of symmetric functions and the operators `L`, `L⁻¹`, `L†`.
//!
//! Plethysm `g[f]` is computed through the power-sum basis: `g ↦ g[f]` is a
//! ring map, and on power sums `p_r[f]` multiplies every index of `f`'s
//! power-sum expansion by `r`. The inner operand `f` must be a nonnegative
//! integer combination of Schur functions — that is the regime where the
//! monomial-substitution definition applies, and the only one needed here
//! (the inner operand is always `h₂` in practice).
//!
//! `L` is multiplication by `Π_{i≤j} 1/(1+x_i x_j)`; its symbol is the
//! alternating sum `Σ_μ (−1)^{|μ|} s_{2μ}`, its inverse has symbol
//! `Σ_r e_r[h₂] = Σ_{r,λ} b_{r,λ} s_λ` with nonnegative branching
//! coefficients `b_{r,λ}`, and its adjoint is `L† = Σ_μ (−1)^{|μ|} s_{2μ}^⊥`.
//! Operators are handled as truncated symbols with explicit degree bounds;
//! nothing here pretends to act on the completion of `Λ`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Signed};

use crate::partition::{partitions_of, Partition};
use crate::symfunc::{
    inner_product, multiply_truncated, powersum_to_schur, schur_to_powersum, skew,
    PowerSumExpansion, SchurExpansion,
};
use crate::Error;

/// `p_r[f]`: every part of every index partition of `f` is multiplied by
/// `r`; coefficients are unchanged.
pub fn plethysm_powersum(r: usize, f: &PowerSumExpansion) -> PowerSumExpansion {
    assert!(r >= 1, "plethysm_powersum needs r >= 1");
    PowerSumExpansion::from_terms(f.terms().map(|(mu, c)| {
        let parts = mu.parts().iter().map(|&p| r * p).collect();
        (Partition::new(parts), c.clone())
    }))
}

/// Plethysm `g[f]` for integral `g` and monomial-positive `f`.
pub fn plethysm(g: &SchurExpansion, f: &SchurExpansion) -> Result<SchurExpansion, Error> {
    if f.terms().any(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeInnerOperand);
    }
    let fp = schur_to_powersum(f);
    let gp = schur_to_powersum(g);
    let mut acc = PowerSumExpansion::zero();
    for (mu, c) in gp.terms() {
        let mut term = PowerSumExpansion::one();
        for &r in mu.parts() {
            term = term.mul(&plethysm_powersum(r, &fp));
        }
        acc.add_scaled(&term, c);
    }
    Ok(powersum_to_schur(&acc).expect("plethysm of integral operands is integral"))
}

/// `h_r[h₂] = Σ_{|λ|=r} s_{2λ}`, built directly from partition enumeration.
pub fn h_of_h2(r: usize) -> SchurExpansion {
    SchurExpansion::from_terms(
        partitions_of(r)
            .into_iter()
            .map(|lam| (lam.double(), BigInt::from(1))),
    )
}

/// The branching coefficients `b_{r,λ}`: the Schur support of `e_r[h₂]`,
/// i.e. the multiplicity of `λ` in the `r`-th antisymmetric power of the
/// symmetric square. All values are nonnegative.
pub fn branching_coefficients(r: usize) -> BTreeMap<Partition, BigInt> {
    let expansion = plethysm(&SchurExpansion::elementary(r), &SchurExpansion::complete(2))
        .expect("h2 is monomial-positive");
    expansion
        .terms()
        .map(|(lam, c)| (lam.clone(), c.clone()))
        .collect()
}

/// A multiplication operator given by its symbol, truncated by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOperatorExpansion {
    pub degree_bound: usize,
    pub terms: SchurExpansion,
}

/// The symbol of `L` to degree `d`: `Σ_{|2μ| ≤ d} (−1)^{|μ|} s_{2μ}`.
pub fn l_truncated(d: usize) -> TruncatedOperatorExpansion {
    let mut terms = SchurExpansion::zero();
    for m in 0..=(d / 2) {
        let sign = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
        for mu in partitions_of(m) {
            terms.add_term(mu.double(), sign.clone());
        }
    }
    TruncatedOperatorExpansion {
        degree_bound: d,
        terms,
    }
}

/// The symbol of `L⁻¹` to degree `d`: `Σ_{2r ≤ d} e_r[h₂]`.
pub fn l_inverse_truncated(d: usize) -> TruncatedOperatorExpansion {
    let mut terms = SchurExpansion::zero();
    for r in 0..=(d / 2) {
        for (lam, b) in branching_coefficients(r) {
            terms.add_term(lam, b);
        }
    }
    TruncatedOperatorExpansion {
        degree_bound: d,
        terms,
    }
}

/// `L† f = Σ_μ (−1)^{|μ|} s_{2μ}^⊥ f`; the sum is finite because skewing
/// by partitions larger than `f` vanishes.
pub fn l_dagger(f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    let top = f.max_degree().unwrap_or(0);
    for m in 0..=(top / 2) {
        let sign = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
        for mu in partitions_of(m) {
            out.add_scaled(&skew(&mu.double(), f), &sign);
        }
    }
    out
}

/// Verifies, to degree `d`, that the power-sum form
/// `L = exp( Σ_i ((−1)^i p_i² + 2(−1)^{i/2} θ_i p_i) / 2i )` with
/// `θ_i = (1 + (−1)^i)/2` agrees with the Schur symbol of [`l_truncated`].
///
/// Exists purely as a verification oracle for the operator's two forms.
pub fn l_powersum_form_check(d: usize) -> bool {
    fn neg1(k: usize) -> BigInt {
        BigInt::from(if k.is_multiple_of(2) { 1 } else { -1 })
    }
    let mut arg = PowerSumExpansion::zero();
    for i in 1..=d {
        if 2 * i <= d {
            let coeff = BigRational::new(neg1(i), BigInt::from(2 * i));
            arg.add_term(Partition::new(vec![i, i]), coeff);
        }
        // θ_i = (1 + (−1)^i)/2 vanishes for odd i, so the floor in the
        // exponent i/2 never contributes a wrong sign
        let theta = BigRational::new(BigInt::from(1) + neg1(i), BigInt::from(2));
        let coeff = BigRational::from_integer(neg1(i / 2)) * theta
            / BigRational::from_integer(BigInt::from(i));
        arg.add_term(Partition::row(i), coeff);
    }
    let expanded = arg.exp_truncated(d);
    match powersum_to_schur(&expanded) {
        Ok(schur) => schur == l_truncated(d).terms,
        Err(_) => false,
    }
}

/// Checks `⟨L s_ρ, s_λ⟩ = ⟨s_ρ, L† s_λ⟩` for all `|ρ|, |λ| ≤ max_size`.
pub fn l_adjointness_check(max_size: usize) -> bool {
    let l = l_truncated(max_size);
    let mut daggers: Vec<(Partition, SchurExpansion)> = Vec::new();
    for n in 0..=max_size {
        for lam in partitions_of(n) {
            daggers.push((lam.clone(), l_dagger(&SchurExpansion::schur(lam))));
        }
    }
    for n in 0..=max_size {
        for rho in partitions_of(n) {
            let l_rho = multiply_truncated(&l.terms, &SchurExpansion::schur(rho.clone()), max_size);
            for (lam, dagger) in &daggers {
                let lhs = l_rho.coefficient(lam);
                let rhs = inner_product(&SchurExpansion::schur(rho.clone()), dagger);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Multiplies by a truncated operator symbol and discards everything above
/// the bound. The dropped symbol terms could only have produced higher
/// degrees, so this agrees with the untruncated operator below the bound.
pub fn apply_truncated(op: &TruncatedOperatorExpansion, f: &SchurExpansion) -> SchurExpansion {
    multiply_truncated(&op.terms, f, op.degree_bound)
}
