//! The ring `Λ` of symmetric functions in the Schur and power-sum bases.
//!
//! [`SchurExpansion`] holds integer combinations of Schur functions `s_λ`;
//! [`PowerSumExpansion`] holds rational combinations of power-sum monomials
//! `p_μ = p_{μ₁}p_{μ₂}⋯`. The two bases convert into each other exactly:
//! power sums expand over Schur functions through the hook expansion
//! `p_r = Σ_k (−1)^k s_{(r−k,1^k)}`, and the reverse direction uses the
//! orthogonality `⟨p_μ, p_ν⟩ = z_μ δ_{μν}` against that expansion.
//!
//! Grading is tracked implicitly by partition size; any series-like
//! computation takes an explicit degree bound.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use crate::partition::{partitions_of, Partition};
use crate::{lr, Error};

/// Default ceiling on `n_vars * degree` for [`eval_monomials`]; evaluation in
/// explicit variables exists for small cross-checks, not for scale.
pub const DEFAULT_EVAL_GUARD: usize = 128;

/// A finite integer-coefficient combination of Schur functions.
///
/// Zero coefficients are never stored; two expansions are equal iff their
/// term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `s_∅ = 1`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// The basis element `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurExpansion { terms }
    }

    /// The elementary symmetric function `e_r = s_{1^r}`.
    pub fn elementary(r: usize) -> Self {
        Self::schur(Partition::column(r))
    }

    /// The complete homogeneous symmetric function `h_r = s_{(r)}`.
    pub fn complete(r: usize) -> Self {
        Self::schur(Partition::row(r))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending partition order; display order is the reverse.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
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

    pub fn add_scaled(&mut self, other: &SchurExpansion, factor: &BigInt) {
        for (lam, c) in &other.terms {
            self.add_term(lam.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Largest `|λ|` over stored terms, `None` when zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// The part of the expansion supported on `|λ| = d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(lam, _)| lam.size() == d)
                .map(|(lam, c)| (lam.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms with `|λ| > d`.
    pub fn truncate_degree(&self, d: usize) -> Self {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(lam, _)| lam.size() <= d)
                .map(|(lam, c)| (lam.clone(), c.clone()))
                .collect(),
        }
    }

    /// Conjugates every index partition (the `ω`-twisted relabelling).
    pub fn conjugated(&self) -> Self {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .map(|(lam, c)| (lam.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// JSON form: `{"basis": "s", "terms": [{"partition": [...], "coefficient": "..."}]}`,
    /// terms in descending partition order, coefficients as strings.
    pub fn to_json(&self) -> Value {
        expansion_json("s", self.terms.iter().rev())
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (lam, c) in &rhs.terms {
            self.add_term(lam.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurExpansion> for SchurExpansion {
    fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (lam, c) in &rhs.terms {
            self.add_term(lam.clone(), -c.clone());
        }
    }
}

impl Neg for SchurExpansion {
    type Output = SchurExpansion;
    fn neg(self) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.into_iter().map(|(lam, c)| (lam, -c)).collect(),
        }
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expansion(f, "s", self.terms.iter().rev())
    }
}

/// The bilinear extension of `s_μ s_ν = Σ_λ c_{μ,ν}^λ s_λ`.
pub fn multiply(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    multiply_truncated(f, g, usize::MAX)
}

/// As [`multiply`], skipping term pairs whose product would exceed the
/// degree bound. The product is graded by size, so this equals the full
/// product followed by [`SchurExpansion::truncate_degree`].
pub fn multiply_truncated(f: &SchurExpansion, g: &SchurExpansion, d: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, a) in f.terms() {
        for (nu, b) in g.terms() {
            if mu.size() > d.saturating_sub(nu.size()) {
                continue;
            }
            let ab = a * b;
            for lambda in partitions_of(mu.size() + nu.size()) {
                let c = lr::coefficient(mu, nu, &lambda);
                if c != 0 {
                    out.add_term(lambda, &ab * BigInt::from(c));
                }
            }
        }
    }
    out
}

/// The Hall inner product `⟨f, g⟩ = Σ_λ f_λ g_λ` (Schur functions orthonormal).
pub fn inner_product(f: &SchurExpansion, g: &SchurExpansion) -> BigInt {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut total = BigInt::zero();
    for (lam, c) in small.terms() {
        if let Some(d) = large.terms.get(lam) {
            total += c * d;
        }
    }
    total
}

/// The adjoint `s_μ^⊥` of multiplication by `s_μ`:
/// `skew(μ, s_λ) = s_{λ/μ}`, extended linearly.
pub fn skew(mu: &Partition, f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lam, c) in f.terms() {
        out.add_scaled(&lr::skew_schur_expand(lam, mu), c);
    }
    out
}

/// A finite rational-coefficient combination of power-sum monomials `p_μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `p_∅ = 1`.
    pub fn one() -> Self {
        Self::power(Partition::empty())
    }

    /// The basis monomial `p_μ`.
    pub fn power(mu: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu, BigRational::one());
        PowerSumExpansion { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (mu, c) in terms {
            out.add_term(mu, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.terms
            .get(mu)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
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

    pub fn add_scaled(&mut self, other: &PowerSumExpansion, factor: &BigRational) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c * factor);
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).min()
    }

    pub fn truncate_degree(&self, d: usize) -> Self {
        PowerSumExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.size() <= d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product: `p_μ · p_ν = p_{μ∪ν}` (multiset union of parts), bilinear.
    pub fn mul(&self, other: &PowerSumExpansion) -> PowerSumExpansion {
        let mut out = PowerSumExpansion::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.add_term(Partition::new(parts), ca * cb);
            }
        }
        out
    }

    /// `exp(f) = Σ_k f^k / k!` truncated to total degree `d`.
    ///
    /// Panics if `f` has a constant term (the series would not terminate
    /// degreewise).
    pub fn exp_truncated(&self, d: usize) -> PowerSumExpansion {
        assert!(
            self.min_degree().is_none_or(|m| m >= 1),
            "exp of a series with a constant term"
        );
        let mut result = PowerSumExpansion::one();
        let mut power = PowerSumExpansion::one();
        let mut factorial = BigInt::one();
        for k in 1..=d {
            power = power.mul(self).truncate_degree(d);
            if power.is_zero() {
                break;
            }
            factorial *= BigInt::from(k);
            let inv = BigRational::new(BigInt::one(), factorial.clone());
            result.add_scaled(&power, &inv);
        }
        result
    }

    /// JSON form with basis tag `"p"`.
    pub fn to_json(&self) -> Value {
        expansion_json("p", self.terms.iter().rev())
    }
}

impl fmt::Display for PowerSumExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expansion(f, "p", self.terms.iter().rev())
    }
}

/// Hook expansion `p_r = Σ_{k=0}^{r−1} (−1)^k s_{(r−k, 1^k)}` for `r ≥ 1`.
fn power_in_schur(r: usize) -> SchurExpansion {
    assert!(r >= 1);
    let mut out = SchurExpansion::zero();
    for k in 0..r {
        let mut parts = vec![r - k];
        parts.extend(std::iter::repeat_n(1, k));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.add_term(Partition::new(parts), BigInt::from(sign));
    }
    out
}

/// `p_μ` in the Schur basis: the LR product of the hook expansions of its parts.
fn power_basis_in_schur(mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::one();
    for &r in mu.parts() {
        out = multiply(&out, &power_in_schur(r));
    }
    out
}

/// `z_μ = Π_i i^{m_i} m_i!` where `m_i` is the number of parts equal to `i`.
fn z_of(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0usize;
    let parts = mu.parts();
    for i in 0..parts.len() {
        run += 1;
        if i + 1 == parts.len() || parts[i + 1] != parts[i] {
            for m in 1..=run {
                z *= BigInt::from(parts[i] * m);
            }
            // each of the `run` equal parts contributes a factor `part`,
            // and the run contributes `run!`; both are folded in above
            run = 0;
        }
    }
    z
}

/// Change of basis `Λ → ℚ ⊗ Λ`: `s_λ = Σ_μ ⟨s_λ, p_μ⟩ p_μ / z_μ`.
pub fn schur_to_powersum(f: &SchurExpansion) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::zero();
    let degrees: std::collections::BTreeSet<usize> = f.terms().map(|(lam, _)| lam.size()).collect();
    for n in degrees {
        let mus = partitions_of(n);
        let tables: Vec<(Partition, SchurExpansion, BigInt)> = mus
            .into_iter()
            .map(|mu| {
                let expansion = power_basis_in_schur(&mu);
                let z = z_of(&mu);
                (mu, expansion, z)
            })
            .collect();
        for (lam, c) in f.terms().filter(|(lam, _)| lam.size() == n) {
            for (mu, expansion, z) in &tables {
                let chi = expansion.coefficient(lam);
                if chi.is_zero() {
                    continue;
                }
                out.add_term(mu.clone(), BigRational::new(c * chi, z.clone()));
            }
        }
    }
    out
}

/// Inverse change of basis; fails with [`Error::NonIntegralResult`] when the
/// Schur coefficients of the input are not integers.
pub fn powersum_to_schur(g: &PowerSumExpansion) -> Result<SchurExpansion, Error> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (mu, c) in g.terms() {
        for (lam, chi) in power_basis_in_schur(mu).terms() {
            let add = c * BigRational::from_integer(chi.clone());
            let entry = acc.entry(lam.clone()).or_insert_with(BigRational::zero);
            *entry += add;
        }
    }
    let mut out = SchurExpansion::zero();
    for (lam, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegralResult);
        }
        out.add_term(lam, c.to_integer());
    }
    Ok(out)
}

/// A multivariate polynomial as an association from exponent vectors to
/// integers; the image of a symmetric function in finitely many variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialPoly {
    pub fn zero(n_vars: usize) -> Self {
        MonomialPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut out = Self::zero(n_vars);
        out.add_term(vec![0; n_vars], BigInt::one());
        out
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[usize]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.n_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = Self::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl AddAssign<&MonomialPoly> for MonomialPoly {
    fn add_assign(&mut self, rhs: &MonomialPoly) {
        assert_eq!(self.n_vars, rhs.n_vars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

/// The polynomial image of `f` in `n_vars` variables, computed by
/// semistandard-tableau enumeration; `s_λ` maps to zero when `λ` has more
/// than `n_vars` parts.
///
/// Panics when `n_vars * degree` exceeds [`DEFAULT_EVAL_GUARD`]; use
/// [`try_eval_monomials`] to pick the bound.
pub fn eval_monomials(f: &SchurExpansion, n_vars: usize) -> MonomialPoly {
    try_eval_monomials(f, n_vars, DEFAULT_EVAL_GUARD).expect("monomial evaluation guard")
}

/// As [`eval_monomials`] with an explicit guard on `n_vars * degree`.
pub fn try_eval_monomials(
    f: &SchurExpansion,
    n_vars: usize,
    guard: usize,
) -> Result<MonomialPoly, Error> {
    let degree = f.max_degree().unwrap_or(0);
    if n_vars * degree > guard {
        return Err(Error::EvalGuardExceeded(format!(
            "n_vars {n_vars} * degree {degree} > {guard}"
        )));
    }
    let mut out = MonomialPoly::zero(n_vars);
    for (lam, c) in f.terms() {
        if lam.len() > n_vars {
            continue;
        }
        let mono = schur_monomials(lam, n_vars);
        for (e, count) in mono.terms() {
            out.add_term(e.clone(), c * count);
        }
    }
    Ok(out)
}

/// Monomial expansion of a single `s_λ` in `n_vars` variables: one monomial
/// `x^{weight(T)}` per semistandard tableau `T` of shape `λ` with entries
/// `≤ n_vars`.
fn schur_monomials(lambda: &Partition, n_vars: usize) -> MonomialPoly {
    let mut out = MonomialPoly::zero(n_vars);
    if lambda.is_empty() {
        out.add_term(vec![0; n_vars], BigInt::one());
        return out;
    }
    if lambda.len() > n_vars {
        return out;
    }
    let rows = lambda.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; lambda.part(r)]).collect();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c)))
        .collect();
    let mut weight = vec![0usize; n_vars];
    fill(&mut out, n_vars, &cells, 0, &mut grid, &mut weight);
    out
}

fn fill(
    out: &mut MonomialPoly,
    n_vars: usize,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    weight: &mut Vec<usize>,
) {
    if idx == cells.len() {
        out.add_term(weight.clone(), BigInt::one());
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=n_vars {
        grid[r][c] = v;
        weight[v - 1] += 1;
        fill(out, n_vars, cells, idx + 1, grid, weight);
        weight[v - 1] -= 1;
        grid[r][c] = 0;
    }
}

fn write_expansion<'a, C>(
    f: &mut fmt::Formatter<'_>,
    symbol: &str,
    terms: impl Iterator<Item = (&'a Partition, &'a C)>,
) -> fmt::Result
where
    C: Signed + fmt::Display + 'a,
{
    let mut first = true;
    for (lam, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{mag}*{symbol}{lam}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn expansion_json<'a, C>(
    basis: &str,
    terms: impl Iterator<Item = (&'a Partition, &'a C)>,
) -> Value
where
    C: fmt::Display + 'a,
{
    let terms: Vec<Value> = terms
        .map(|(lam, c)| {
            json!({
                "partition": lam.parts(),
                "coefficient": c.to_string(),
            })
        })
        .collect();
    json!({ "basis": basis, "terms": terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[usize]) -> SchurExpansion {
        SchurExpansion::schur(p(parts))
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn addition_and_cancellation() {
        let mut f = s(&[1]);
        f -= &s(&[1]);
        assert!(f.is_zero());
        let mut g = s(&[2]);
        g += &s(&[1, 1]);
        assert_eq!(g.len(), 2);
        let five = SchurExpansion::one().scaled(&int(2));
        let mut h = SchurExpansion::one().scaled(&int(3));
        h += &five;
        assert_eq!(h.coefficient(&Partition::empty()), int(5));
    }

    #[test]
    fn multiply_examples() {
        let f = SchurExpansion::from_terms([(p(&[2]), int(3)), (p(&[1, 1]), int(-1))]);
        assert_eq!(multiply(&SchurExpansion::one(), &f), f);

        let sq = multiply(&s(&[1]), &s(&[1]));
        let mut expected = s(&[2]);
        expected += &s(&[1, 1]);
        assert_eq!(sq, expected);

        let prod = multiply(&s(&[2, 1]), &s(&[2, 1]));
        let expected = SchurExpansion::from_terms([
            (p(&[4, 2]), int(1)),
            (p(&[4, 1, 1]), int(1)),
            (p(&[3, 3]), int(1)),
            (p(&[3, 2, 1]), int(2)),
            (p(&[3, 1, 1, 1]), int(1)),
            (p(&[2, 2, 2]), int(1)),
            (p(&[2, 2, 1, 1]), int(1)),
        ]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&s(&[3, 1]), &s(&[3, 1])), int(1));
        assert_eq!(inner_product(&s(&[2]), &s(&[1, 1])), int(0));
        let sq = multiply(&s(&[1]), &s(&[1]));
        assert_eq!(inner_product(&sq, &s(&[2])), int(1));
    }

    #[test]
    fn skew_examples() {
        let f = SchurExpansion::from_terms([(p(&[2]), int(2)), (p(&[1]), int(-1))]);
        assert_eq!(skew(&Partition::empty(), &f), f);
        assert!(skew(&p(&[2]), &s(&[1, 1])).is_zero());
        let mut expected = s(&[2]);
        expected += &s(&[1, 1]);
        assert_eq!(skew(&p(&[1]), &s(&[2, 1])), expected);
    }

    #[test]
    fn basis_conversion_examples() {
        assert_eq!(
            schur_to_powersum(&s(&[1])),
            PowerSumExpansion::power(p(&[1]))
        );

        let h2 = schur_to_powersum(&s(&[2]));
        let half = BigRational::new(int(1), int(2));
        let expected =
            PowerSumExpansion::from_terms([(p(&[1, 1]), half.clone()), (p(&[2]), half.clone())]);
        assert_eq!(h2, expected);

        let p2 = powersum_to_schur(&PowerSumExpansion::power(p(&[2]))).unwrap();
        let expected = SchurExpansion::from_terms([(p(&[2]), int(1)), (p(&[1, 1]), int(-1))]);
        assert_eq!(p2, expected);

        let half_p1 = PowerSumExpansion::from_terms([(p(&[1]), half)]);
        assert_eq!(powersum_to_schur(&half_p1), Err(Error::NonIntegralResult));
    }

    #[test]
    fn round_trip_to_degree_eight() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let back =
                    powersum_to_schur(&schur_to_powersum(&SchurExpansion::schur(lam.clone())))
                        .unwrap();
                assert_eq!(back, SchurExpansion::schur(lam));
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&Partition::empty()), int(1));
        assert_eq!(z_of(&p(&[1, 1])), int(2));
        assert_eq!(z_of(&p(&[2])), int(2));
        assert_eq!(z_of(&p(&[3, 1])), int(3));
        assert_eq!(z_of(&p(&[2, 2, 1])), int(8));
        // Σ_μ n!/z_μ counts permutations by cycle type
        for n in 1..=7usize {
            let fact: u64 = (1..=n as u64).product();
            let total: BigRational = partitions_of(n)
                .iter()
                .map(|mu| BigRational::new(int(fact as i64), z_of(mu)))
                .sum();
            assert_eq!(total, BigRational::from_integer(int(fact as i64)));
        }
    }

    #[test]
    fn eval_examples() {
        let x1 = eval_monomials(&s(&[1]), 2);
        assert_eq!(x1.coefficient(&[1, 0]), int(1));
        assert_eq!(x1.coefficient(&[0, 1]), int(1));
        assert_eq!(x1.terms().count(), 2);

        assert!(eval_monomials(&s(&[1, 1, 1]), 2).is_zero());

        let q = eval_monomials(&s(&[2]), 2);
        assert_eq!(q.coefficient(&[2, 0]), int(1));
        assert_eq!(q.coefficient(&[1, 1]), int(1));
        assert_eq!(q.coefficient(&[0, 2]), int(1));
        assert_eq!(q.terms().count(), 3);

        assert!(try_eval_monomials(&s(&[8]), 20, 128).is_err());
    }

    #[test]
    fn eval_is_multiplicative() {
        // the evaluation map is a ring homomorphism; exercises eval against
        // the LR product
        let a = s(&[2, 1]);
        let b = s(&[1, 1]);
        let lhs = eval_monomials(&multiply(&a, &b), 3);
        let rhs = eval_monomials(&a, 3).mul(&eval_monomials(&b, 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_forms() {
        let mut f = s(&[2]);
        f += &s(&[1, 1]);
        assert_eq!(f.to_string(), "1*s[2] + 1*s[1,1]");
        let mut g = s(&[2]);
        g -= &SchurExpansion::one();
        assert_eq!(g.to_string(), "1*s[2] - 1*s[]");
        assert_eq!(SchurExpansion::zero().to_string(), "0");
        let h = schur_to_powersum(&s(&[2]));
        assert_eq!(h.to_string(), "1/2*p[2] + 1/2*p[1,1]");

        let json = f.to_json();
        assert_eq!(json["basis"], "s");
        assert_eq!(json["terms"][0]["partition"][0], 2);
        assert_eq!(json["terms"][0]["coefficient"], "1");
    }
}
