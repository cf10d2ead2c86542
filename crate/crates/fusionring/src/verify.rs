//! Cross-validation suites.
//!
//! Every closed-form result in this crate has at least one independent
//! computation path; the suites here play the paths against each other at
//! configurable desk-scale bounds and report pass/fail per suite. The CLI
//! `verify` command and the acceptance tests are thin wrappers over
//! [`run_all`] and the individual suite functions.
//!
//! With the default [`VerifyOptions`] (`max_size = 5`, `max_degree = 8`)
//! the derived per-suite bounds are:
//!
//! | suite               | bounds                                      |
//! |---------------------|---------------------------------------------|
//! | characters          | `(3 routes)` for all `\|λ\| ≤ 8`            |
//! | fusion-triple       | all pairs `\|μ\|,\|ν\| ≤ 5`                 |
//! | fundamental-fusion  | `r ≤ 4`, `\|μ\| ≤ 6`, column and row        |
//! | plethysm            | `h_r[h₂]` for `r ≤ 6`                       |
//! | operators           | inverse to degree 10, power-sum form and    |
//! |                     | adjointness to 8                            |
//! | generating-functions| `n_x, n_y ≤ 3`, degree 6                    |
//! | basis-change        | round trip and positivity for `\|λ\| ≤ 8`   |
//! | structural          | symmetries for `\|μ\|,\|ν\| ≤ 4`            |
//! | pairings            | counts to `n = 7`, `ι` image to `a+b+c ≤ 4` |

use std::fmt;
use std::time::Instant;

use num::{BigInt, Signed};

use crate::exec::{self, ExecMode};
use crate::genfun;
use crate::grothendieck::{
    char_x, fuse_closed, fuse_fundamental_column, fuse_fundamental_row, fuse_via_characters,
    fuse_via_y_basis, to_x_basis, x_to_y, Basis, GrothendieckElement,
};
use crate::pairings;
use crate::partition::{partitions_of, Partition};
use crate::plethysm;
use crate::symfunc::{multiply, SchurExpansion};

/// Bounds for [`run_all`]; the defaults reproduce the full suite.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Size bound for fusion operands.
    pub max_size: usize,
    /// Degree bound for characters, operators and series.
    pub max_degree: usize,
    pub mode: ExecMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_size: 5,
            max_degree: 8,
            mode: ExecMode::default(),
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}  {name:<22} {millis:>6} ms  {detail}",
            name = self.name,
            millis = self.millis,
            detail = self.detail
        )
    }
}

fn report(
    name: &'static str,
    started: Instant,
    cases: usize,
    failures: Vec<String>,
) -> SuiteReport {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{cases} checks")
    } else {
        format!(
            "{} of {cases} checks failed; first: {}",
            failures.len(),
            failures[0]
        )
    };
    SuiteReport {
        name,
        passed,
        detail,
        millis: started.elapsed().as_millis(),
    }
}

fn all_partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// Characters by three routes: the alternating skew sum, the operator
/// `L†` applied to `s_λ`, and the matrix adjoint of multiplication by the
/// truncated symbol of `L`.
pub fn characters_suite(max_size: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let lambdas = all_partitions_up_to(max_size);
    let rhos = lambdas.clone();
    let l = plethysm::l_truncated(max_size);
    // rows of the matrix of L: L s_ρ expanded over Schur functions, only up
    // to the degree the comparison reads
    let l_rows: Vec<(Partition, SchurExpansion)> = exec::map(mode, rhos, |rho| {
        let row = crate::symfunc::multiply_truncated(
            &l.terms,
            &SchurExpansion::schur(rho.clone()),
            max_size,
        );
        (rho, row)
    });
    let cases = lambdas.len();
    let failures: Vec<String> = exec::map(mode, lambdas, |lam| {
        let skew_sum = char_x(&lam);
        let operator = plethysm::l_dagger(&SchurExpansion::schur(lam.clone()));
        if skew_sum != operator {
            return Some(format!("char({lam}) skew-sum vs L† disagree"));
        }
        let matrix = SchurExpansion::from_terms(
            l_rows
                .iter()
                .map(|(rho, row)| (rho.clone(), row.coefficient(&lam))),
        );
        if skew_sum != matrix {
            return Some(format!("char({lam}) vs adjoint matrix row disagree"));
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    report("characters", started, cases, failures)
}

/// Fusion by three independent routes on all pairs `|μ|,|ν| ≤ max_size`.
pub fn fusion_triple_suite(max_size: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let parts = all_partitions_up_to(max_size);
    let pairs: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|mu| parts.iter().map(move |nu| (mu.clone(), nu.clone())))
        .collect();
    let cases = pairs.len();
    let failures: Vec<String> = exec::map(mode, pairs, |(mu, nu)| {
        let closed = fuse_closed(&mu, &nu);
        if closed != fuse_via_characters(&mu, &nu) {
            return Some(format!("fuse({mu},{nu}): closed vs characters"));
        }
        if closed != fuse_via_y_basis(&mu, &nu) {
            return Some(format!("fuse({mu},{nu}): closed vs Y-basis route"));
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    report("fusion-triple", started, cases, failures)
}

/// The strip closed forms for fusion with one-column and one-row classes,
/// including the conjugation transport between them.
pub fn fundamental_fusion_suite(max_r: usize, max_mu: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let mus = all_partitions_up_to(max_mu);
    let cases: Vec<(usize, Partition)> = (0..=max_r)
        .flat_map(|r| mus.iter().map(move |mu| (r, mu.clone())))
        .collect();
    let total = cases.len();
    let failures: Vec<String> = exec::map(mode, cases, |(r, mu)| {
        let column = fuse_fundamental_column(r, &mu);
        if column != fuse_closed(&Partition::column(r), &mu) {
            return Some(format!("column rule r={r} mu={mu}"));
        }
        let row = fuse_fundamental_row(r, &mu);
        if row != fuse_closed(&Partition::row(r), &mu) {
            return Some(format!("row rule r={r} mu={mu}"));
        }
        if row != fuse_fundamental_column(r, &mu.conjugate()).conjugated() {
            return Some(format!("conjugation transport r={r} mu={mu}"));
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    report("fundamental-fusion", started, total, failures)
}

/// `h_r[h₂] = Σ_{|λ|=r} s_{2λ}` for `r ≤ max_r`.
pub fn plethysm_suite(max_r: usize) -> SuiteReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let h2 = SchurExpansion::complete(2);
    for r in 0..=max_r {
        let via_plethysm = match plethysm::plethysm(&SchurExpansion::complete(r), &h2) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("h_{r}[h2] errored: {e}"));
                continue;
            }
        };
        if via_plethysm != plethysm::h_of_h2(r) {
            failures.push(format!("h_{r}[h2] differs from doubled-partition sum"));
        }
    }
    report("plethysm", started, max_r + 1, failures)
}

/// Operator identities: `L · L⁻¹ = 1` to `inverse_degree`, the power-sum
/// form of `L` to `powersum_degree`, and `⟨L s_ρ, s_λ⟩ = ⟨s_ρ, L† s_λ⟩`
/// for sizes up to `adjoint_size`.
pub fn operator_suite(
    inverse_degree: usize,
    powersum_degree: usize,
    adjoint_size: usize,
) -> SuiteReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    for d in 0..=inverse_degree {
        let prod = multiply(
            &plethysm::l_truncated(d).terms,
            &plethysm::l_inverse_truncated(d).terms,
        )
        .truncate_degree(d);
        if prod != SchurExpansion::one() {
            failures.push(format!("L·L⁻¹ ≠ 1 at degree {d}"));
        }
    }
    if !plethysm::l_powersum_form_check(powersum_degree) {
        failures.push(format!(
            "power-sum form of L fails at degree {powersum_degree}"
        ));
    }
    if !plethysm::l_adjointness_check(adjoint_size) {
        failures.push(format!("adjointness fails at size {adjoint_size}"));
    }
    report("operators", started, inverse_degree + 3, failures)
}

/// Generating functions: character sum side vs product side for all
/// `n_x, n_y ≤ max_vars` at `degree`, the Cauchy identities, and the
/// two-variable-set comultiplication identity for `L`.
pub fn genfun_suite(max_vars: usize, degree: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for nx in 0..=max_vars {
        for ny in 0..=max_vars {
            cases += 3;
            let sum = genfun::expand_sum_side_with_mode(nx, ny, degree, mode);
            if sum != genfun::expand_product_side(nx, ny, degree) {
                failures.push(format!("sum vs product at ({nx},{ny},{degree})"));
            }
            if !genfun::check_cauchy(nx, ny, degree, false) {
                failures.push(format!("Cauchy at ({nx},{ny},{degree})"));
            }
            if !genfun::check_cauchy(nx, ny, degree, true) {
                failures.push(format!("dual Cauchy at ({nx},{ny},{degree})"));
            }
        }
    }
    cases += 1;
    let comult_degree = degree.min(5);
    if !genfun::check_comultiplication_l(comult_degree) {
        failures.push(format!("comultiplication of L at degree {comult_degree}"));
    }
    report("generating-functions", started, cases, failures)
}

/// Basis change: `y_to_x ∘ x_to_y` is the identity, extended constants are
/// nonnegative with even-gap support, and the one-column classes agree in
/// both bases.
pub fn basis_change_suite(max_size: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let lambdas = all_partitions_up_to(max_size);
    let cases = lambdas.len() + max_size + 1;
    let mut failures: Vec<String> = exec::map(mode, lambdas, |lam| {
        let in_y = x_to_y(&lam);
        let back = to_x_basis(&in_y);
        if back != GrothendieckElement::simple(Basis::X, lam.clone()) {
            return Some(format!("round trip fails for {lam}"));
        }
        let expanded = crate::grothendieck::y_to_x(&lam);
        for (mu, n) in expanded.terms() {
            if n.is_negative() {
                return Some(format!("negative extended constant n[{lam},{mu}]"));
            }
            if (lam.size() - mu.size()) % 2 != 0 {
                return Some(format!("odd-gap extended constant n[{lam},{mu}]"));
            }
        }
        if expanded.coefficient(&lam) != BigInt::from(1) {
            return Some(format!("leading coefficient of y_to_x({lam}) is not 1"));
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    for n in 0..=max_size {
        let col = Partition::column(n);
        if x_to_y(&col) != GrothendieckElement::simple(Basis::Y, col.clone()) {
            failures.push(format!("X and Y one-column classes differ at n={n}"));
        }
    }
    report("basis-change", started, cases, failures)
}

/// Structural properties of fusion: nonnegativity, commutativity,
/// conjugation covariance and the duality symmetry
/// `R_{μ,ν}^λ = R_{λ,ν′}^μ`.
pub fn structural_suite(max_size: usize, mode: ExecMode) -> SuiteReport {
    let started = Instant::now();
    let parts = all_partitions_up_to(max_size);
    let pairs: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|mu| parts.iter().map(move |nu| (mu.clone(), nu.clone())))
        .collect();
    let cases = pairs.len();
    let failures: Vec<String> = exec::map(mode, pairs, |(mu, nu)| {
        let product = fuse_closed(&mu, &nu);
        if product.terms().any(|(_, c)| c.is_negative()) {
            return Some(format!("negative fusion coefficient in ({mu},{nu})"));
        }
        if product != fuse_closed(&nu, &mu) {
            return Some(format!("fusion not commutative on ({mu},{nu})"));
        }
        let conjugated = fuse_closed(&mu.conjugate(), &nu.conjugate());
        if product.conjugated() != conjugated {
            return Some(format!("conjugation covariance fails on ({mu},{nu})"));
        }
        let nu_conj = nu.conjugate();
        for (lam, r) in product.terms() {
            let dual = fuse_closed(lam, &nu_conj);
            if &dual.coefficient(&mu) != r {
                return Some(format!("duality symmetry fails on ({mu},{nu}) at {lam}"));
            }
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    report("structural", started, cases, failures)
}

fn crossing_count(p: &pairings::Pairing) -> usize {
    let pairs = p.pairs();
    let mut crossings = 0;
    for (i, &(a1, b1)) in pairs.iter().enumerate() {
        for &(a2, b2) in &pairs[i + 1..] {
            let (a1, b1, a2, b2) = if a1 < a2 {
                (a1, b1, a2, b2)
            } else {
                (a2, b2, a1, b1)
            };
            if a1 < a2 && a2 < b1 && b1 < b2 {
                crossings += 1;
            }
        }
    }
    crossings
}

/// Pairing combinatorics: `(2n−1)!!` total and `n!` transversal up to
/// `max_n`; at `n = 3` the basis splits as one maximally-crossing diagram
/// plus 14 lower terms; the image of `ι` equals the directly-enumerated
/// interblock set for `a+b+c ≤ max_abc`.
pub fn pairings_suite(max_n: usize, max_abc: usize) -> SuiteReport {
    let started = Instant::now();
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        cases += 2;
        let all = pairings::enumerate_pairings(n);
        let expected: usize = (0..n).fold(1, |acc, k| acc * (2 * k + 1));
        if all.len() != expected {
            failures.push(format!("|P_{n}| = {} ≠ {expected}", all.len()));
        }
        let transversal = all
            .iter()
            .filter(|p| pairings::classify(p) == pairings::PairingClass::Transversal)
            .count();
        let expected: usize = (1..=n).product();
        if transversal != expected {
            failures.push(format!("|T_{n}| = {transversal} ≠ {expected}"));
        }
    }
    if max_n >= 3 {
        cases += 1;
        let all = pairings::enumerate_pairings(3);
        let max_crossing = all.iter().filter(|p| crossing_count(p) == 3).count();
        if !(all.len() == 15 && max_crossing == 1) {
            failures.push(format!(
                "basis split at n=3: {} diagrams, {} maximal",
                all.len(),
                max_crossing
            ));
        }
    }
    for a in 0..=max_abc {
        for b in 0..=max_abc {
            for c in 0..=max_abc {
                if a + b + c > max_abc {
                    continue;
                }
                cases += 1;
                let mut image: Vec<pairings::Pairing> = Vec::new();
                let t1: Vec<_> = pairings::enumerate_t(0, a + b);
                let t2: Vec<_> = pairings::enumerate_t(0, b + c);
                let t3: Vec<_> = pairings::enumerate_t(0, a + c);
                for p1 in &t1 {
                    for p2 in &t2 {
                        for p3 in &t3 {
                            match pairings::iota(p1, p2, p3, a, b, c) {
                                Ok(q) => image.push(q),
                                Err(e) => {
                                    failures.push(format!("iota({a},{b},{c}) errored: {e}"));
                                }
                            }
                        }
                    }
                }
                image.sort();
                image.dedup();
                let mut s = pairings::enumerate_interblock(a, b, c);
                s.sort();
                if image != s {
                    failures.push(format!("iota image ≠ S at ({a},{b},{c})"));
                }
            }
        }
    }
    report("pairings", started, cases, failures)
}

/// Runs every suite with bounds derived from `opts` (see the module table).
pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    let VerifyOptions {
        max_size,
        max_degree,
        mode,
    } = *opts;
    vec![
        characters_suite(max_degree, mode),
        fusion_triple_suite(max_size, mode),
        fundamental_fusion_suite(max_size.saturating_sub(1).max(1), max_size + 1, mode),
        plethysm_suite(max_size + 1),
        operator_suite(max_degree + 2, max_degree, max_degree),
        genfun_suite(3, max_degree.saturating_sub(2), mode),
        basis_change_suite(max_degree, mode),
        structural_suite(max_size.saturating_sub(1).max(1), mode),
        pairings_suite(
            max_degree.saturating_sub(1).max(1),
            max_size.saturating_sub(1).max(1),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let mode = ExecMode::Sequential;
        assert!(characters_suite(4, mode).passed);
        assert!(fusion_triple_suite(2, mode).passed);
        assert!(fundamental_fusion_suite(2, 3, mode).passed);
        assert!(plethysm_suite(3).passed);
        assert!(operator_suite(4, 4, 4).passed);
        assert!(genfun_suite(1, 3, mode).passed);
        assert!(basis_change_suite(4, mode).passed);
        assert!(structural_suite(2, mode).passed);
        assert!(pairings_suite(3, 2).passed);
    }

    #[test]
    fn report_formatting() {
        let r = SuiteReport {
            name: "characters",
            passed: true,
            detail: "12 checks".into(),
            millis: 3,
        };
        assert!(r.to_string().starts_with("PASS"));
    }
}
