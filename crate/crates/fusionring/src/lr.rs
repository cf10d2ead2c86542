//! Littlewood-Richardson coefficients `c_{μ,ν}^λ`.
//!
//! Coefficients are computed by depth-first enumeration of LR skew tableaux:
//! semistandard fillings of `λ/μ` with content `ν` whose reverse reading word
//! is a lattice word. Results are memoized in a process-wide concurrent
//! table, canonicalized under the `c_{μ,ν}^λ = c_{ν,μ}^λ` symmetry so each
//! unordered pair is stored once.
//!
//! The memo can be primed from / flushed to a newline-delimited cache file
//! with records `mu;nu;lambda;coefficient` in the bracket text encoding of
//! [`Partition`]. A file that fails to parse is reported as
//! [`CacheError::Corrupt`] and nothing from it is used.

use std::io::{self, Write};
use std::path::Path;
use std::sync::LazyLock;

use dashmap::DashMap;
use num::BigInt;
use thiserror::Error;

use crate::partition::{partitions_of, Partition};
use crate::symfunc::SchurExpansion;

type Key = (Partition, Partition, Partition);

static MEMO: LazyLock<DashMap<Key, u64>> = LazyLock::new(DashMap::new);

/// The Littlewood-Richardson coefficient `c_{μ,ν}^λ`.
///
/// Zero unless `|μ| + |ν| = |λ|` and both `μ ⊆ λ` and `ν ⊆ λ`. Concurrent
/// callers may duplicate the enumeration but never observe a wrong value;
/// memo writes are idempotent.
pub fn coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1; // forced mu == lambda by the size check
    }
    let (inner, content) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (inner.clone(), content.clone(), lambda.clone());
    if let Some(v) = MEMO.get(&key) {
        return *v;
    }
    let v = count_lattice_tableaux(lambda, inner, content);
    MEMO.insert(key, v);
    v
}

/// Counts semistandard fillings of `λ/μ` with content `ν` whose reverse
/// reading word (rows top to bottom, each row right to left) is a lattice
/// word. Assumes `μ ⊆ λ` and `|λ/μ| = |ν|`.
fn count_lattice_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut search = Search {
        lambda,
        mu,
        nu,
        cells,
        grid: (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect(),
        counts: vec![0; nu.len() + 1],
    };
    search.run(0)
}

struct Search<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        // rows weakly increase left to right; the right neighbour is filled
        let max_v = if c + 1 < self.lambda.part(r) {
            self.grid[r][c + 1]
        } else {
            self.nu.len()
        };
        // columns strictly increase; no constraint when the cell above is in mu
        let min_v = if r > 0 && c >= self.mu.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min_v..=max_v {
            if self.counts[v] >= self.nu.part(v - 1) {
                continue;
            }
            // lattice condition on the prefix of the reverse reading word
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.grid[r][c] = v;
            self.counts[v] += 1;
            total += self.run(idx + 1);
            self.counts[v] -= 1;
            self.grid[r][c] = 0;
        }
        total
    }
}

/// Expansion of the skew Schur function `s_{λ/μ} = Σ_ν c_{μ,ν}^λ s_ν`;
/// the zero expansion when `μ ⊄ λ`.
pub fn skew_schur_expand(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    if mu.is_empty() {
        return SchurExpansion::schur(lambda.clone());
    }
    let mut out = SchurExpansion::zero();
    if !lambda.contains(mu) {
        return out;
    }
    for nu in partitions_of(lambda.size() - mu.size()) {
        let c = coefficient(mu, &nu, lambda);
        if c != 0 {
            out.add_term(nu, BigInt::from(c));
        }
    }
    out
}

/// `h_r · s_μ`: the sum of `s_λ` over horizontal-strip additions of size `r`.
pub fn pieri_row(mu: &Partition, r: usize) -> SchurExpansion {
    SchurExpansion::from_terms(
        mu.add_horizontal_strips(r)
            .into_iter()
            .map(|lam| (lam, BigInt::from(1))),
    )
}

/// `e_r · s_μ`: the sum of `s_λ` over vertical-strip additions of size `r`.
pub fn pieri_column(mu: &Partition, r: usize) -> SchurExpansion {
    SchurExpansion::from_terms(
        mu.add_vertical_strips(r)
            .into_iter()
            .map(|lam| (lam, BigInt::from(1))),
    )
}

/// Number of entries currently memoized.
pub fn cache_len() -> usize {
    MEMO.len()
}

/// Failure to load a persistent coefficient cache.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot read cache file: {0}")]
    Io(#[from] io::Error),
    #[error("corrupt cache record on line {line}: {content:?}")]
    Corrupt { line: usize, content: String },
}

/// Loads `mu;nu;lambda;coefficient` records into the memo.
///
/// Returns the number of records loaded. A file with any malformed record is
/// rejected whole — callers should warn and carry on with a cold cache.
pub fn load_cache_file(path: &Path) -> Result<usize, CacheError> {
    let text = std::fs::read_to_string(path)?;
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let corrupt = || CacheError::Corrupt {
            line: i + 1,
            content: raw.to_string(),
        };
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 4 {
            return Err(corrupt());
        }
        let mu: Partition = fields[0].parse().map_err(|_| corrupt())?;
        let nu: Partition = fields[1].parse().map_err(|_| corrupt())?;
        let lambda: Partition = fields[2].parse().map_err(|_| corrupt())?;
        let value: u64 = fields[3].parse().map_err(|_| corrupt())?;
        records.push((mu, nu, lambda, value));
    }
    let n = records.len();
    for (mu, nu, lambda, value) in records {
        let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
        MEMO.insert((a, b, lambda), value);
    }
    Ok(n)
}

/// Writes the entire memo to `path`, one record per line, sorted by key.
///
/// Returns the number of records written.
pub fn save_cache_file(path: &Path) -> io::Result<usize> {
    let mut entries: Vec<(Key, u64)> = MEMO.iter().map(|e| (e.key().clone(), *e.value())).collect();
    entries.sort();
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    for ((mu, nu, lambda), value) in &entries {
        writeln!(file, "{mu};{nu};{lambda};{value}")?;
    }
    file.flush()?;
    Ok(entries.len())
}
