//! Young-diagram arithmetic.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers, the
//! universal index type of this crate. Trailing zeros are never stored, so
//! two partitions are equal iff their part vectors are equal.
//!
//! The derived `Ord` is lexicographic on the part vectors; all user-visible
//! output iterates in *descending* order ("reverse lexicographic"), e.g.
//! `[4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1] > []`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A Young diagram: weakly decreasing positive parts, empty for `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Creates a partition, stripping trailing zeros.
    ///
    /// Panics if the remaining parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row diagram `(n)`; `∅` for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column diagram `1ⁿ`; `∅` for `n = 0`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate (transposed) diagram: `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Doubles every part: `2λ = (2λ₁, 2λ₂, …)`.
    pub fn double(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Containment of diagrams: `μ_i ≤ λ_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i))
    }

    /// All diagrams obtained by adding `n` cells, no two in the same row.
    pub fn add_vertical_strips(&self, n: usize) -> Vec<Partition> {
        partitions_of(self.size() + n)
            .into_iter()
            .filter(|lam| lam.contains(self) && is_vertical_strip(lam, self))
            .collect()
    }

    /// All diagrams obtained by adding `n` cells, no two in the same column.
    pub fn add_horizontal_strips(&self, n: usize) -> Vec<Partition> {
        partitions_of(self.size() + n)
            .into_iter()
            .filter(|lam| lam.contains(self) && is_horizontal_strip(lam, self))
            .collect()
    }

    /// All diagrams obtained by removing `n` cells, no two in the same row.
    pub fn remove_vertical_strips(&self, n: usize) -> Vec<Partition> {
        if n > self.size() {
            return Vec::new();
        }
        partitions_of(self.size() - n)
            .into_iter()
            .filter(|nu| self.contains(nu) && is_vertical_strip(self, nu))
            .collect()
    }

    /// All diagrams obtained by removing `n` cells, no two in the same column.
    pub fn remove_horizontal_strips(&self, n: usize) -> Vec<Partition> {
        if n > self.size() {
            return Vec::new();
        }
        partitions_of(self.size() - n)
            .into_iter()
            .filter(|nu| self.contains(nu) && is_horizontal_strip(self, nu))
            .collect()
    }
}

/// `λ/μ` is a horizontal strip: at most one cell per column, i.e. the rows
/// interleave as `λ_{i+1} ≤ μ_i`. Assumes `μ ⊆ λ`.
fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    (1..lambda.len()).all(|i| lambda.part(i) <= mu.part(i - 1))
}

/// `λ/μ` is a vertical strip: at most one cell per row. Assumes `μ ⊆ λ`.
fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    (0..lambda.len()).all(|i| lambda.part(i) <= mu.part(i) + 1)
}

/// All partitions of `n` in reverse-lexicographic (descending) order,
/// starting at `(n)` and ending at `1ⁿ`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut parts = vec![n];
    loop {
        out.push(Partition {
            parts: parts.clone(),
        });
        let Some(k) = parts.iter().rposition(|&p| p > 1) else {
            break;
        };
        let mut rem: usize = parts[k..].iter().sum();
        let v = parts[k] - 1;
        parts.truncate(k);
        while rem > 0 {
            let c = rem.min(v);
            parts.push(c);
            rem -= c;
        }
    }
    out
}

impl fmt::Display for Partition {
    /// The text encoding used uniformly by the CLI and cache keys:
    /// `[3,1,1]`, with `∅` written `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Failure to parse the `[a,b,c]` partition grammar.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid partition {input:?}: {reason}")]
pub struct ParsePartitionError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParsePartitionError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err("expected brackets, e.g. [3,1,1] or []"))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: usize = piece
                .trim()
                .parse()
                .map_err(|_| err("parts must be positive integers"))?;
            if p == 0 {
                return Err(err("parts must be positive"));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent oracle for strip sets: add cells one at a time in every
    /// legal way, then keep the results whose added cells satisfy the strip
    /// condition, tracked per row/column of each added cell.
    fn strips_by_cell_addition(mu: &Partition, n: usize, vertical: bool) -> BTreeSet<Partition> {
        // state: (partition, set of (row, col) cells added so far)
        let mut states = vec![(mu.clone(), Vec::<(usize, usize)>::new())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (lam, cells) in &states {
                for row in 0..=lam.len() {
                    let cur = lam.part(row);
                    // can we grow row `row` by one cell?
                    if row > 0 && lam.part(row - 1) == cur {
                        continue;
                    }
                    let col = cur; // 0-based column of the new cell
                    let clash = cells
                        .iter()
                        .any(|&(r, c)| if vertical { r == row } else { c == col });
                    if clash {
                        continue;
                    }
                    let mut parts = lam.parts().to_vec();
                    if row == parts.len() {
                        parts.push(1);
                    } else {
                        parts[row] += 1;
                    }
                    let mut cells = cells.clone();
                    cells.push((row, col));
                    next.push((Partition::new(parts), cells));
                }
            }
            states = next;
        }
        states.into_iter().map(|(lam, _)| lam).collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn double_examples() {
        assert_eq!(Partition::empty().double(), Partition::empty());
        assert_eq!(p(&[2, 1]).double(), p(&[4, 2]));
        assert_eq!(p(&[1, 1, 1]).double(), p(&[2, 2, 2]));
        assert_eq!(p(&[2, 1]).double().size(), 2 * p(&[2, 1]).size());
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[3, 2]).contains(&p(&[2, 1])));
        assert!(!p(&[1, 1]).contains(&p(&[2])));
        for k in 0..5 {
            assert!(Partition::row(k).contains(&Partition::empty()));
        }
    }

    #[test]
    fn strip_examples() {
        assert_eq!(p(&[1]).add_vertical_strips(0), vec![p(&[1])]);
        assert_eq!(p(&[1]).add_vertical_strips(1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            p(&[2, 1]).add_vertical_strips(2),
            vec![p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[2, 1, 1, 1])]
        );
        assert_eq!(Partition::empty().add_horizontal_strips(3), vec![p(&[3])]);
        assert_eq!(p(&[1]).add_horizontal_strips(1), vec![p(&[2]), p(&[1, 1])]);
        // adding two cells in column 1 is not a horizontal strip
        assert_eq!(
            p(&[2]).add_horizontal_strips(2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
        assert_eq!(
            p(&[2, 1]).remove_horizontal_strips(1),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert!(p(&[1]).remove_vertical_strips(2).is_empty());
        assert!(p(&[1]).remove_horizontal_strips(2).is_empty());
        // the only two-cell removal from [2,2] with no two cells in a row
        // takes the last cell of each row
        assert_eq!(p(&[2, 2]).remove_vertical_strips(2), vec![p(&[1, 1])]);
    }

    #[test]
    fn strips_match_cell_addition_oracle() {
        for m in 0..=6 {
            for mu in partitions_of(m) {
                for n in 0..=3 {
                    for vertical in [true, false] {
                        let got: BTreeSet<_> = if vertical {
                            mu.add_vertical_strips(n)
                        } else {
                            mu.add_horizontal_strips(n)
                        }
                        .into_iter()
                        .collect();
                        let want = strips_by_cell_addition(&mu, n, vertical);
                        assert_eq!(got, want, "mu={mu} n={n} vertical={vertical}");
                    }
                }
            }
        }
    }

    #[test]
    fn add_remove_duality() {
        for m in 0..=8 {
            for mu in partitions_of(m) {
                for n in 0..=4.min(m) {
                    for nu in mu.remove_vertical_strips(n) {
                        assert!(nu.add_vertical_strips(n).contains(&mu));
                    }
                    for nu in mu.remove_horizontal_strips(n) {
                        assert!(nu.add_horizontal_strips(n).contains(&mu));
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_swaps_strip_types() {
        for m in 0..=6 {
            for mu in partitions_of(m) {
                for n in 0..=3 {
                    let via_conj: BTreeSet<_> = mu
                        .conjugate()
                        .add_horizontal_strips(n)
                        .into_iter()
                        .map(|lam| lam.conjugate())
                        .collect();
                    let direct: BTreeSet<_> = mu.add_vertical_strips(n).into_iter().collect();
                    assert_eq!(direct, via_conj);
                    for lam in mu.add_vertical_strips(n) {
                        assert!(lam.contains(&mu));
                        assert_eq!(lam.size(), mu.size() + n);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(10).len(), 42);

        // p(n) by Euler's pentagonal-number recurrence
        let mut pn = vec![1i64];
        for n in 1..=30usize {
            let mut total = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * pn[n - g1];
                if g2 <= n {
                    total += sign * pn[n - g2];
                }
            }
            pn.push(total);
        }
        for (n, expected) in pn.iter().enumerate() {
            assert_eq!(partitions_of(n).len() as i64, *expected, "p({n})");
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["[]", "[1]", "[3,1,1]", "[10,10,2]"] {
            let lam: Partition = s.parse().unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }
}
