//! Finite-truncation checks of the generating-function identities.
//!
//! Everything here works with [`TruncatedSeries`]: dense-ish integer series
//! in two sets of variables `x_1..x_{n_x}` and `y_1..y_{n_y}`, truncated by
//! total degree. Geometric factors like `1/(1−x_i y_j)` are expanded by
//! repeated truncated multiplication — no floating point anywhere.
//!
//! The headline identity equates the character generating function with a
//! product form:
//!
//! ```text
//! Σ_λ s_λ(x) Φ(X_λ)(y) = Π_{i≤j} 1/(1+x_i x_j) · Π_{i,j} 1/(1−x_i y_j)
//! ```
//!
//! whose two sides are [`expand_sum_side`] and [`expand_product_side`]. The
//! first product runs over unordered pairs `i ≤ j`, matching the definition
//! of the operator `L` as multiplication by `Π_{i≤j} 1/(1+x_i x_j)`.
//!
//! Series expansion in explicit variables is a validation device, not a
//! scaling strategy: it is supported for at most 6 total variables, and the
//! operator-level (variable-free) checks in [`crate::plethysm`] are the
//! intended path beyond that.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::exec::{self, ExecMode};
use crate::grothendieck::char_x;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{eval_monomials, multiply, MonomialPoly, SchurExpansion};
use crate::{lr, plethysm};

/// Largest number of `x` plus `y` variables the dense series support.
pub const MAX_SERIES_VARS: usize = 6;

/// An integer power series in two variable sets, truncated by total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    x_vars: usize,
    y_vars: usize,
    degree_bound: usize,
    terms: BTreeMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl TruncatedSeries {
    pub fn zero(x_vars: usize, y_vars: usize, degree_bound: usize) -> Self {
        assert!(
            x_vars + y_vars <= MAX_SERIES_VARS,
            "dense truncated series support at most {MAX_SERIES_VARS} variables"
        );
        TruncatedSeries {
            x_vars,
            y_vars,
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(x_vars: usize, y_vars: usize, degree_bound: usize) -> Self {
        let mut out = Self::zero(x_vars, y_vars, degree_bound);
        out.add_term(vec![0; x_vars], vec![0; y_vars], BigInt::one());
        out
    }

    pub fn x_vars(&self) -> usize {
        self.x_vars
    }

    pub fn y_vars(&self) -> usize {
        self.y_vars
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<usize>, Vec<usize>), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, ex: &[usize], ey: &[usize]) -> BigInt {
        self.terms
            .get(&(ex.to_vec(), ey.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds a term, silently dropping anything beyond the degree bound.
    pub fn add_term(&mut self, ex: Vec<usize>, ey: Vec<usize>, c: BigInt) {
        debug_assert_eq!(ex.len(), self.x_vars);
        debug_assert_eq!(ey.len(), self.y_vars);
        if c.is_zero() {
            return;
        }
        let degree: usize = ex.iter().sum::<usize>() + ey.iter().sum::<usize>();
        if degree > self.degree_bound {
            return;
        }
        match self.terms.entry((ex, ey)) {
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

    pub fn add_assign(&mut self, other: &TruncatedSeries) {
        for ((ex, ey), c) in &other.terms {
            self.add_term(ex.clone(), ey.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &TruncatedSeries, factor: &BigInt) {
        for ((ex, ey), c) in &other.terms {
            self.add_term(ex.clone(), ey.clone(), c * factor);
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.x_vars, other.x_vars);
        assert_eq!(self.y_vars, other.y_vars);
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = Self::zero(self.x_vars, self.y_vars, bound);
        for ((ax, ay), ca) in &self.terms {
            for ((bx, by), cb) in &other.terms {
                let ex: Vec<usize> = ax.iter().zip(bx).map(|(u, v)| u + v).collect();
                let ey: Vec<usize> = ay.iter().zip(by).map(|(u, v)| u + v).collect();
                out.add_term(ex, ey, ca * cb);
            }
        }
        out
    }

    /// Embeds the product `px(x) · py(y)` of two single-set polynomials.
    pub fn from_split_product(
        px: &MonomialPoly,
        py: &MonomialPoly,
        degree_bound: usize,
    ) -> TruncatedSeries {
        let mut out = Self::zero(px.n_vars(), py.n_vars(), degree_bound);
        for (ex, cx) in px.terms() {
            for (ey, cy) in py.terms() {
                out.add_term(ex.clone(), ey.clone(), cx * cy);
            }
        }
        out
    }

    /// The geometric series `Σ_k (sign·m)^k` of a single monomial `m`,
    /// truncated; `sign = −1` gives `1/(1+m)`, `sign = 1` gives `1/(1−m)`.
    fn geometric(
        x_vars: usize,
        y_vars: usize,
        degree_bound: usize,
        ex: &[usize],
        ey: &[usize],
        sign: i64,
    ) -> TruncatedSeries {
        let mdeg: usize = ex.iter().sum::<usize>() + ey.iter().sum::<usize>();
        assert!(mdeg > 0);
        let mut out = Self::zero(x_vars, y_vars, degree_bound);
        let mut k = 0usize;
        while k * mdeg <= degree_bound {
            let c = BigInt::from(if sign < 0 && k % 2 == 1 { -1 } else { 1 });
            out.add_term(
                ex.iter().map(|e| e * k).collect(),
                ey.iter().map(|e| e * k).collect(),
                c,
            );
            k += 1;
        }
        out
    }
}

/// The product side `Π_{i≤j} 1/(1+x_i x_j) · Π_{i,j} 1/(1−x_i y_j)`
/// expanded to total degree `d`.
pub fn expand_product_side(n_x: usize, n_y: usize, d: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(n_x, n_y, d);
    for i in 0..n_x {
        for j in i..n_x {
            let mut ex = vec![0; n_x];
            ex[i] += 1;
            ex[j] += 1;
            let factor = TruncatedSeries::geometric(n_x, n_y, d, &ex, &vec![0; n_y], -1);
            out = out.mul(&factor);
        }
    }
    for i in 0..n_x {
        for j in 0..n_y {
            let mut ex = vec![0; n_x];
            ex[i] = 1;
            let mut ey = vec![0; n_y];
            ey[j] = 1;
            let factor = TruncatedSeries::geometric(n_x, n_y, d, &ex, &ey, 1);
            out = out.mul(&factor);
        }
    }
    out
}

/// The sum side `Σ_λ s_λ(x) Φ(X_λ)(y)` truncated to total degree `d`.
pub fn expand_sum_side(n_x: usize, n_y: usize, d: usize) -> TruncatedSeries {
    expand_sum_side_with_mode(n_x, n_y, d, ExecMode::default())
}

/// As [`expand_sum_side`]; the sum over `λ` is data-parallel under
/// [`ExecMode::Parallel`].
pub fn expand_sum_side_with_mode(
    n_x: usize,
    n_y: usize,
    d: usize,
    mode: ExecMode,
) -> TruncatedSeries {
    let lambdas: Vec<Partition> = (0..=d)
        .flat_map(partitions_of)
        .filter(|lam| lam.len() <= n_x)
        .collect();
    let partials = exec::map(mode, lambdas, |lam| {
        let sx = eval_monomials(&SchurExpansion::schur(lam.clone()), n_x);
        if sx.is_zero() {
            return TruncatedSeries::zero(n_x, n_y, d);
        }
        let cy = eval_monomials(&char_x(&lam), n_y);
        TruncatedSeries::from_split_product(&sx, &cy, d)
    });
    let mut out = TruncatedSeries::zero(n_x, n_y, d);
    for partial in partials {
        out.add_assign(&partial);
    }
    out
}

/// Verifies the Cauchy identity `Σ_λ s_λ(x) s_λ(y) = Π 1/(1−x_i y_j)`
/// (or its dual `Σ_λ s_λ(x) s_{λ′}(y) = Π (1+x_i y_j)`) to degree `d`.
pub fn check_cauchy(n_x: usize, n_y: usize, d: usize, dual: bool) -> bool {
    let mut sum = TruncatedSeries::zero(n_x, n_y, d);
    for n in 0..=d {
        for lam in partitions_of(n) {
            let sx = eval_monomials(&SchurExpansion::schur(lam.clone()), n_x);
            if sx.is_zero() {
                continue;
            }
            let ylabel = if dual { lam.conjugate() } else { lam };
            let sy = eval_monomials(&SchurExpansion::schur(ylabel), n_y);
            sum.add_assign(&TruncatedSeries::from_split_product(&sx, &sy, d));
        }
    }
    let mut product = TruncatedSeries::one(n_x, n_y, d);
    for i in 0..n_x {
        for j in 0..n_y {
            let mut ex = vec![0; n_x];
            ex[i] = 1;
            let mut ey = vec![0; n_y];
            ey[j] = 1;
            let factor = if dual {
                let mut f = TruncatedSeries::one(n_x, n_y, d);
                f.add_term(ex, ey, BigInt::one());
                f
            } else {
                TruncatedSeries::geometric(n_x, n_y, d, &ex, &ey, 1)
            };
            product = product.mul(&factor);
        }
    }
    sum == product
}

/// Splits a symmetric function over the union variable set
/// `{x⁽¹⁾₁, x⁽¹⁾₂} ∪ {x⁽²⁾₁, x⁽²⁾₂}` into a 2+2 truncated series.
fn union_series(f: &SchurExpansion, d: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(2, 2, d);
    for (e, c) in eval_monomials(f, 4).terms() {
        out.add_term(vec![e[0], e[1]], vec![e[2], e[3]], c.clone());
    }
    out
}

/// The dual-Cauchy kernel `Σ_λ s_λ(x⁽¹⁾) s_{λ′}(x⁽²⁾)` in 2+2 variables.
fn dual_cauchy_kernel(d: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(2, 2, d);
    for n in 0..=d {
        for lam in partitions_of(n) {
            let sx = eval_monomials(&SchurExpansion::schur(lam.clone()), 2);
            if sx.is_zero() {
                continue;
            }
            let sy = eval_monomials(&SchurExpansion::schur(lam.conjugate()), 2);
            out.add_assign(&TruncatedSeries::from_split_product(&sx, &sy, d));
        }
    }
    out
}

/// Verifies, for every `f = s_ρ` with `|ρ| ≤ d` in 2+2 variables, that
///
/// ```text
/// (Σ_λ s_λ(x⁽¹⁾) s_{λ′}(x⁽²⁾)) · L(f)(x⁽¹⁾, x⁽²⁾) = Σ_i L(g_i)(x⁽¹⁾) L(h_i)(x⁽²⁾)
/// ```
///
/// where `f(x, y) = Σ_i g_i(x) h_i(y)` is the coproduct expansion
/// `s_ρ(x, y) = Σ c_{μ,ν}^ρ s_μ(x) s_ν(y)`.
pub fn check_comultiplication_l(d: usize) -> bool {
    let kernel = dual_cauchy_kernel(d);
    let l = plethysm::l_truncated(d);
    for n in 0..=d {
        for rho in partitions_of(n) {
            let lf = multiply(&l.terms, &SchurExpansion::schur(rho.clone())).truncate_degree(d);
            let lhs = kernel.mul(&union_series(&lf, d));

            let mut rhs = TruncatedSeries::zero(2, 2, d);
            for a in 0..=n {
                for mu in partitions_of(a) {
                    for nu in partitions_of(n - a) {
                        let c = lr::coefficient(&mu, &nu, &rho);
                        if c == 0 {
                            continue;
                        }
                        let lmu = multiply(&l.terms, &SchurExpansion::schur(mu.clone()))
                            .truncate_degree(d);
                        let lnu = multiply(&l.terms, &SchurExpansion::schur(nu.clone()))
                            .truncate_degree(d);
                        let piece = TruncatedSeries::from_split_product(
                            &eval_monomials(&lmu, 2),
                            &eval_monomials(&lnu, 2),
                            d,
                        );
                        rhs.add_scaled(&piece, &BigInt::from(c));
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
