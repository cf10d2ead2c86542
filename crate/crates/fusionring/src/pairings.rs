//! Fixed-point-free involutions of `{1, …, 2n}`.
//!
//! These index the diagram basis of the underlying algebra: `P_n` is all
//! pairings of `2n` boundary points (numbered clockwise, the first `n` on
//! top), of size `(2n−1)!!`. A pairing is *transversal* (`T_n`, size `n!`)
//! when the first `n` points pair with the last `n`, and *ideal* otherwise.
//! `T_{i,n−i} ≅ T_i × T_{n−i}` is the subset where the first `i` points pair
//! into the last `i` positions and the remaining top points pair into the
//! remaining bottom positions.
//!
//! [`iota`] composes three transversal pairings through the three-bundle
//! pairing [`p_abc`] (`a` through-strings, a width-`b` cup, `c` crossing
//! strings), tracing strings through the stacked diagrams; its image is the
//! set of pairings with no pair inside any of the three boundary arcs,
//! enumerated directly by [`enumerate_interblock`]. Labels, signs and phases
//! are not modelled — this module is pure enumeration.

use std::fmt;

use crate::Error;

/// A fixed-point-free involution stored as its image sequence with 1-based
/// point labels matching the clockwise boundary numbering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pairing {
    map: Vec<usize>,
}

impl Pairing {
    /// Validates that `map[k-1] = p(k)` describes a fixed-point-free
    /// involution of `{1, …, len}` with `len` even.
    pub fn new(map: Vec<usize>) -> Result<Self, Error> {
        let len = map.len();
        if !len.is_multiple_of(2) {
            return Err(Error::InvalidPairing(format!(
                "odd number of points: {len}"
            )));
        }
        for (i, &v) in map.iter().enumerate() {
            let k = i + 1;
            if v == 0 || v > len {
                return Err(Error::InvalidPairing(format!("image {v} out of range")));
            }
            if v == k {
                return Err(Error::InvalidPairing(format!("fixed point at {k}")));
            }
            if map[v - 1] != k {
                return Err(Error::InvalidPairing(format!(
                    "not an involution at {k} -> {v}"
                )));
            }
        }
        Ok(Pairing { map })
    }

    /// Total number of points `2n`.
    pub fn points(&self) -> usize {
        self.map.len()
    }

    pub fn n(&self) -> usize {
        self.map.len() / 2
    }

    /// The partner of point `k` (1-based).
    pub fn image(&self, k: usize) -> usize {
        self.map[k - 1]
    }

    /// The pairs `{k, p(k)}` sorted by smaller element.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.points())
            .filter(|&k| k < self.image(k))
            .map(|k| (k, self.image(k)))
            .collect()
    }

    /// Reads a transversal pairing of `2m` points as the permutation of
    /// `{1, …, m}` with `p′(i) = 2m + 1 − p(i)`.
    pub fn as_permutation(&self) -> Vec<usize> {
        let m = self.n();
        (1..=m).map(|i| 2 * m + 1 - self.image(i)).collect()
    }
}

impl fmt::Display for Pairing {
    /// Cycle-style pair list, e.g. `(1 4)(2 3)`; the empty pairing is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in self.pairs() {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

/// Ideal/transversal split of `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingClass {
    /// The first `n` points pair with the last `n` points.
    Transversal,
    /// Some pair lies among the first `n` points (equivalently, among the
    /// last `n`).
    Ideal,
}

/// All pairings of `2n` points; `(2n−1)!!` of them, in a fixed order.
pub fn enumerate_pairings(n: usize) -> Vec<Pairing> {
    let mut out = Vec::new();
    let mut map = vec![0usize; 2 * n];
    extend(&mut map, &mut out);
    out
}

fn extend(map: &mut Vec<usize>, out: &mut Vec<Pairing>) {
    let Some(first) = map.iter().position(|&v| v == 0) else {
        out.push(Pairing { map: map.clone() });
        return;
    };
    for partner in first + 1..map.len() {
        if map[partner] != 0 {
            continue;
        }
        map[first] = partner + 1;
        map[partner] = first + 1;
        extend(map, out);
        map[first] = 0;
        map[partner] = 0;
    }
}

/// Transversal iff no pair lies among the first `n` points.
pub fn classify(p: &Pairing) -> PairingClass {
    let n = p.n();
    if (1..=n).any(|k| p.image(k) <= n) {
        PairingClass::Ideal
    } else {
        PairingClass::Transversal
    }
}

fn permutations(values: &[usize]) -> Vec<Vec<usize>> {
    if values.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        let mut rest = values.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// The subset `T_{i,j} ⊆ T_{i+j}`: the first `i` points pair into the last
/// `i` positions and points `i+1..=n` pair into positions `n+1..=2n−i`.
/// Exactly `i!·j!` pairings, realising `T_{i,j} ≅ T_i × T_j`.
pub fn enumerate_t(i: usize, j: usize) -> Vec<Pairing> {
    let n = i + j;
    let upper: Vec<usize> = (2 * n + 1 - i..=2 * n).collect();
    let lower: Vec<usize> = (n + 1..=2 * n - i).collect();
    let mut out = Vec::new();
    for perm1 in permutations(&upper) {
        for perm2 in permutations(&lower) {
            let mut map = vec![0usize; 2 * n];
            for (k, &v) in perm1.iter().enumerate() {
                map[k] = v;
                map[v - 1] = k + 1;
            }
            for (k, &v) in perm2.iter().enumerate() {
                map[i + k] = v;
                map[v - 1] = i + k + 1;
            }
            out.push(Pairing { map });
        }
    }
    out.sort();
    out
}

/// The three-bundle pairing on `2(a+b+c)` points: `a` nested through-strings
/// on the outside, a width-`b` cup pairing the top block `(a, a+2b]` within
/// itself, and `c` strings joining `(a+2b, n+b]` to `(n+b, 2n−a]`.
pub fn p_abc(a: usize, b: usize, c: usize) -> Pairing {
    let n = a + b + c;
    let map = (1..=2 * n)
        .map(|k| {
            if k <= a || k > 2 * n - a {
                2 * n + 1 - k
            } else if k <= a + 2 * b {
                2 * a + 2 * b + 1 - k
            } else {
                2 * n + 2 * b + 1 - k
            }
        })
        .collect();
    Pairing::new(map).expect("p_abc is an involution by construction")
}

/// Composes transversal `p1 ∈ T_{a+b}`, `p2 ∈ T_{b+c}`, `p3 ∈ T_{a+c}`
/// through [`p_abc`]: the pairing of the stacked diagram
/// `p̂3 ∘ p̂_{a,b,c} ∘ (p̂1 ⊗ p̂2)` on `2(a+b+c)` boundary points.
///
/// Since the operands are transversal the strings trace through without
/// closed loops, and the result is the conjugate of `p_{a,b,c}` by the
/// block relabelling the operands induce. It always lands in the
/// interblock set enumerated by [`enumerate_interblock`].
#[allow(clippy::needless_range_loop)] // indices are 1-based point labels
pub fn iota(
    p1: &Pairing,
    p2: &Pairing,
    p3: &Pairing,
    a: usize,
    b: usize,
    c: usize,
) -> Result<Pairing, Error> {
    let n = a + b + c;
    for (p, size, name) in [(p1, a + b, "p1"), (p2, b + c, "p2"), (p3, a + c, "p3")] {
        if p.n() != size {
            return Err(Error::SizeMismatch(format!(
                "{name} must pair 2*{size} points, got 2*{}",
                p.n()
            )));
        }
        if classify(p) != PairingClass::Transversal {
            return Err(Error::InvalidPairing(format!("{name} is not transversal")));
        }
    }
    // entry map from composite boundary labels into the middle diagram
    let mut into_middle = vec![0usize; 2 * n + 1];
    for k in 1..=a + b {
        into_middle[k] = 2 * (a + b) + 1 - p1.image(k);
    }
    for k in a + b + 1..=n + b {
        into_middle[k] = a + b + (2 * (b + c) + 1 - p2.image(k - (a + b)));
    }
    for k in n + b + 1..=2 * n {
        into_middle[k] = 2 * n + 1 - p3.image(k - 2 * b);
    }
    let mut out_of_middle = vec![0usize; 2 * n + 1];
    for k in 1..=2 * n {
        out_of_middle[into_middle[k]] = k;
    }
    let core = p_abc(a, b, c);
    let map = (1..=2 * n)
        .map(|k| out_of_middle[core.image(into_middle[k])])
        .collect();
    Pairing::new(map)
}

/// All pairings of `2(a+b+c)` points with no pair inside any of the blocks
/// `[1, a+b]`, `(a+b, a+2b+c]`, `(a+2b+c, 2n]` — the image of [`iota`].
pub fn enumerate_interblock(a: usize, b: usize, c: usize) -> Vec<Pairing> {
    let n = a + b + c;
    let block = |k: usize| {
        if k <= a + b {
            0
        } else if k <= a + 2 * b + c {
            1
        } else {
            2
        }
    };
    enumerate_pairings(n)
        .into_iter()
        .filter(|p| (1..=2 * n).all(|k| block(k) != block(p.image(k))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn double_factorial(n: usize) -> usize {
        (0..n).fold(1, |acc, k| acc * (2 * k + 1))
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn pairing_counts() {
        for n in 0..=6 {
            let all = enumerate_pairings(n);
            assert_eq!(all.len(), double_factorial(n), "P_{n}");
            let transversal = all
                .iter()
                .filter(|p| classify(p) == PairingClass::Transversal)
                .count();
            assert_eq!(transversal, factorial(n), "T_{n}");
        }
        assert_eq!(enumerate_pairings(3).len(), 15);
    }

    #[test]
    fn classify_examples() {
        let all = enumerate_pairings(1);
        assert_eq!(all.len(), 1);
        assert_eq!(classify(&all[0]), PairingClass::Transversal);
        let all = enumerate_pairings(2);
        let t = all
            .iter()
            .filter(|p| classify(p) == PairingClass::Transversal)
            .count();
        assert_eq!((t, all.len() - t), (2, 1));
        // n=4: 24 transversal out of 105
        let all = enumerate_pairings(4);
        let t = all
            .iter()
            .filter(|p| classify(p) == PairingClass::Transversal)
            .count();
        assert_eq!((t, all.len() - t), (24, 81));
    }

    #[test]
    fn t_subsets() {
        for i in 0..=3 {
            for j in 0..=(3 - i).min(3) {
                let sub = enumerate_t(i, j);
                assert_eq!(sub.len(), factorial(i) * factorial(j), "T_({i},{j})");
                for p in &sub {
                    assert_eq!(classify(p), PairingClass::Transversal);
                }
            }
        }
        // T_{0,n} = T_{n,0} = T_n
        let t3: BTreeSet<Pairing> = enumerate_pairings(3)
            .into_iter()
            .filter(|p| classify(p) == PairingClass::Transversal)
            .collect();
        let t03: BTreeSet<Pairing> = enumerate_t(0, 3).into_iter().collect();
        let t30: BTreeSet<Pairing> = enumerate_t(3, 0).into_iter().collect();
        assert_eq!(t03, t3);
        assert_eq!(t30, t3);
        assert_eq!(enumerate_t(1, 1).len(), 1);
        let t22 = enumerate_t(2, 2);
        assert_eq!(t22.len(), 4);
        for p in &t22 {
            assert_eq!(classify(p), PairingClass::Transversal);
        }
    }

    #[test]
    fn p_abc_shapes() {
        assert_eq!(p_abc(0, 0, 0).points(), 0);
        let p = p_abc(1, 0, 0);
        assert_eq!(p.pairs(), vec![(1, 2)]);
        let p = p_abc(0, 1, 0);
        assert_eq!(p.pairs(), vec![(1, 2)]);
        let p = p_abc(1, 1, 1);
        // a-string 1↔6, cup 2↔3, c-string 4↔5 on 2n = 6 points
        assert_eq!(p.pairs(), vec![(1, 6), (2, 3), (4, 5)]);
    }

    #[test]
    fn iota_trivial_sizes() {
        let t1 = &enumerate_t(0, 1)[0];
        let empty = Pairing::new(vec![]).unwrap();
        let q = iota(t1, &empty, t1, 1, 0, 0).unwrap();
        assert_eq!(q.pairs(), vec![(1, 2)]);
        assert_eq!(
            iota(&empty, &empty, &empty, 0, 0, 0).unwrap(),
            Pairing::new(vec![]).unwrap()
        );
        assert!(iota(t1, &empty, t1, 2, 0, 0).is_err());
    }

    #[test]
    fn iota_image_is_interblock_set() {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    if a + b + c == 0 || a + b + c > 4 {
                        continue;
                    }
                    let mut image = BTreeSet::new();
                    for p1 in transversals(a + b) {
                        for p2 in transversals(b + c) {
                            for p3 in transversals(a + c) {
                                let q = iota(&p1, &p2, &p3, a, b, c).unwrap();
                                image.insert(q);
                            }
                        }
                    }
                    let s: BTreeSet<Pairing> = enumerate_interblock(a, b, c).into_iter().collect();
                    assert_eq!(image, s, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn iota_injective_on_small_bundles() {
        // injectivity holds when every bundle has at most one string; wider
        // bundles collapse simultaneous relabellings of parallel strings
        let (a, b, c) = (1, 1, 1);
        let mut seen = BTreeSet::new();
        let mut count = 0usize;
        for p1 in transversals(a + b) {
            for p2 in transversals(b + c) {
                for p3 in transversals(a + c) {
                    seen.insert(iota(&p1, &p2, &p3, a, b, c).unwrap());
                    count += 1;
                }
            }
        }
        assert_eq!(count, 8);
        assert_eq!(seen.len(), 8);
        assert_eq!(enumerate_interblock(a, b, c).len(), 8);
    }

    fn transversals(m: usize) -> Vec<Pairing> {
        enumerate_pairings(m)
            .into_iter()
            .filter(|p| classify(p) == PairingClass::Transversal)
            .collect()
    }

    #[test]
    fn permutation_identification() {
        for p in transversals(3) {
            let perm = p.as_permutation();
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![1, 2, 3]);
        }
    }

    #[test]
    fn display_form() {
        let p = Pairing::new(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "(1 4)(2 3)");
        assert_eq!(Pairing::new(vec![]).unwrap().to_string(), "()");
        assert!(Pairing::new(vec![1, 2]).is_err());
        assert!(Pairing::new(vec![2, 1, 3]).is_err());
        assert!(Pairing::new(vec![2, 1, 4, 4]).is_err());
    }
}
