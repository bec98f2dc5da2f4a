//! Incidence matrices of four triangles against cyclically ordered normal
//! directions, enumerated up to row permutations and dihedral column symmetry.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("a configuration has exactly 4 rows, got {0}")]
    RowCount(usize),
    #[error("row {row} has {len} columns, expected {cols}")]
    Ragged { row: usize, len: usize, cols: usize },
    #[error("row {0} does not have exactly three 1s")]
    RowSum(usize),
    #[error("rows {0} and {1} are equal")]
    DuplicateRows(usize, usize),
    #[error("invalid entry {0:?}, expected 0 or 1")]
    BadEntry(char),
    #[error("bad profile {profile:?}: {reason}")]
    BadProfile { profile: Vec<usize>, reason: String },
}

/// A 4×k 0/1 matrix: rows are triangles, columns are normal directions in
/// cyclic order, and each row has exactly three 1s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfigMatrix {
    rows: Vec<Vec<u8>>,
}

impl ConfigMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, ConfigError> {
        if rows.len() != 4 {
            return Err(ConfigError::RowCount(rows.len()));
        }
        let cols = rows[0].len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(ConfigError::Ragged {
                    row: i + 1,
                    len: r.len(),
                    cols,
                });
            }
            if r.iter().any(|&b| b > 1) || r.iter().filter(|&&b| b == 1).count() != 3 {
                return Err(ConfigError::RowSum(i + 1));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if rows[i] == rows[j] {
                    return Err(ConfigError::DuplicateRows(i + 1, j + 1));
                }
            }
        }
        Ok(Self { rows })
    }

    /// Parses rows such as `["001011", "001101", …]`.
    pub fn parse(rows: &[&str]) -> Result<Self, ConfigError> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        other => Err(ConfigError::BadEntry(other)),
                    })
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parsed)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols())
            .map(|c| self.rows.iter().map(|r| r[c] as usize).sum())
            .collect()
    }

    fn support(&self, row: usize) -> Vec<usize> {
        (0..self.cols()).filter(|&c| self.rows[row][c] == 1).collect()
    }

    fn permute_columns(&self, perm: &[usize]) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| perm.iter().map(|&p| r[p]).collect())
            .collect()
    }

    /// All images under the row permutations and the dihedral group, as row lists.
    fn orbit(&self) -> BTreeSet<Vec<Vec<u8>>> {
        let mut out = BTreeSet::new();
        for perm in dihedral(self.cols()) {
            let m = self.permute_columns(&perm);
            for rp in row_permutations() {
                out.insert(rp.iter().map(|&i| m[i].clone()).collect());
            }
        }
        out
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit().len()
    }

    /// Whether some row has three 1s in cyclically consecutive columns.
    pub fn has_consecutive_triple(&self) -> bool {
        let k = self.cols();
        self.rows
            .iter()
            .any(|r| (0..k).any(|c| (0..3).all(|d| r[(c + d) % k] == 1)))
    }
}

impl fmt::Display for ConfigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect())
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

impl Serialize for ConfigMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let lines: Vec<String> = self.to_string().lines().map(str::to_string).collect();
        lines.serialize(s)
    }
}

fn row_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The `2k` column maps of the dihedral group on a `k`-cycle; image column
/// `c` reads source column `perm[c]`.
fn dihedral(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(2 * k);
    for shift in 0..k {
        out.push((0..k).map(|c| (c + shift) % k).collect());
        out.push((0..k).map(|c| (k - c + shift) % k).collect());
    }
    out
}

/// Minimum row-major bitstring over the whole symmetry orbit.
pub fn canonical_form(m: &ConfigMatrix) -> ConfigMatrix {
    let best = dihedral(m.cols())
        .into_iter()
        .map(|perm| {
            let mut rows = m.permute_columns(&perm);
            rows.sort();
            rows
        })
        .min()
        .expect("nonempty group");
    ConfigMatrix { rows: best }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorViolation {
    /// 1-based row whose normals all sit in the sector.
    pub inner_row: usize,
    /// 1-based row whose consecutive normals bound the sector.
    pub outer_row: usize,
    /// 1-based bounding columns, read counterclockwise.
    pub sector: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub reason: String,
    pub violation: Option<SectorViolation>,
}

/// Whether `c` lies on the closed cyclic arc from `a` forward to `b`.
fn in_arc(c: usize, a: usize, b: usize, k: usize) -> bool {
    (c + k - a) % k <= (b + k - a) % k
}

/// Every (row, sector) pair where all normals of one row lie in the closed
/// sector between two consecutive normals of another row.
pub fn sector_violations(m: &ConfigMatrix) -> Vec<SectorViolation> {
    let k = m.cols();
    let mut out = Vec::new();
    for outer in 0..4 {
        let s = m.support(outer);
        let gaps = [(s[0], s[1]), (s[1], s[2]), (s[2], s[0])];
        for inner in (0..4).filter(|&i| i != outer) {
            let t = m.support(inner);
            for &(a, b) in &gaps {
                if t.iter().all(|&c| in_arc(c, a, b, k)) {
                    out.push(SectorViolation {
                        inner_row: inner + 1,
                        outer_row: outer + 1,
                        sector: (a + 1, b + 1),
                    });
                }
            }
        }
    }
    out
}

/// Rejects a matrix with a sector violation. Consecutive normals of a
/// triangle span less than a half-turn, so a triangle confined to such a
/// sector could not have positively spanning normals.
pub fn feasibility_check(m: &ConfigMatrix) -> Feasibility {
    match sector_violations(m).into_iter().next() {
        Some(v) => Feasibility {
            feasible: false,
            reason: format!(
                "all normals of row {} lie between consecutive normals {} and {} of row {}",
                v.inner_row, v.sector.0, v.sector.1, v.outer_row
            ),
            violation: Some(v),
        },
        None => Feasibility {
            feasible: true,
            reason: "no row is confined to a sector of another".into(),
            violation: None,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Discard matrices where a row has three cyclically consecutive 1s.
    pub forbid_consecutive_triples: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            forbid_consecutive_triples: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigClass {
    pub matrix: ConfigMatrix,
    pub orbit_size: usize,
    pub feasibility: Feasibility,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub profile: Vec<usize>,
    /// Set when some normal has multiplicity 4 and no enumeration is needed.
    pub shortcut: bool,
    pub raw_count: usize,
    pub classes: Vec<ConfigClass>,
}

impl Census {
    pub fn feasible_count(&self) -> usize {
        self.classes.iter().filter(|c| c.feasibility.feasible).count()
    }

    /// Sum of orbit sizes; equals `raw_count` when the enumeration is exhaustive.
    pub fn orbit_total(&self) -> usize {
        self.classes.iter().map(|c| c.orbit_size).sum()
    }
}

fn validate_profile(profile: &[usize]) -> Result<(), ConfigError> {
    let bad = |reason: &str| ConfigError::BadProfile {
        profile: profile.to_vec(),
        reason: reason.into(),
    };
    if profile.iter().sum::<usize>() != 12 {
        return Err(bad("multiplicities must total 12"));
    }
    if profile.iter().any(|&m| !(2..=4).contains(&m)) {
        return Err(bad("every multiplicity must be 2, 3 or 4"));
    }
    Ok(())
}

/// All distinct cyclic arrangements of the profile multiset.
fn arrangements(profile: &[usize]) -> BTreeSet<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            if i > 0 && rest[i] == rest[i - 1] {
                continue;
            }
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut rest = profile.to_vec();
    rest.sort_unstable();
    let mut out = BTreeSet::new();
    rec(&mut rest, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive census of matrices whose column sums form some cyclic
/// arrangement of `profile`, deduplicated by canonical form.
pub fn enumerate_configs(profile: &[usize], options: EnumerateOptions) -> Result<Census, ConfigError> {
    validate_profile(profile)?;
    if profile.contains(&4) {
        return Ok(Census {
            profile: profile.to_vec(),
            shortcut: true,
            raw_count: 0,
            classes: Vec::new(),
        });
    }
    let k = profile.len();
    let targets = arrangements(profile);
    let triples: Vec<Vec<u8>> = (0..k)
        .flat_map(|a| (a + 1..k).flat_map(move |b| (b + 1..k).map(move |c| (a, b, c))))
        .map(|(a, b, c)| (0..k).map(|x| u8::from(x == a || x == b || x == c)).collect())
        .collect();

    let (raw, found) = (0..triples.len())
        .into_par_iter()
        .map(|first| {
            let mut raw = 0usize;
            let mut found = BTreeMap::new();
            for second in 0..triples.len() {
                for third in 0..triples.len() {
                    for fourth in 0..triples.len() {
                        let idx = [first, second, third, fourth];
                        if (0..4).any(|x| (x + 1..4).any(|y| idx[x] == idx[y])) {
                            continue;
                        }
                        let sums: Vec<usize> = (0..k)
                            .map(|c| idx.iter().map(|&r| triples[r][c] as usize).sum())
                            .collect();
                        if !targets.contains(&sums) {
                            continue;
                        }
                        let m = ConfigMatrix {
                            rows: idx.iter().map(|&r| triples[r].clone()).collect(),
                        };
                        if options.forbid_consecutive_triples && m.has_consecutive_triple() {
                            continue;
                        }
                        raw += 1;
                        let canon = canonical_form(&m);
                        found.entry(canon.clone()).or_insert(canon);
                    }
                }
            }
            (raw, found)
        })
        .reduce(
            || (0, BTreeMap::new()),
            |(ra, mut fa), (rb, fb)| {
                fa.extend(fb);
                (ra + rb, fa)
            },
        );

    let classes = found
        .into_keys()
        .map(|matrix| ConfigClass {
            orbit_size: matrix.orbit_size(),
            feasibility: feasibility_check(&matrix),
            matrix,
        })
        .collect();
    Ok(Census {
        profile: profile.to_vec(),
        shortcut: false,
        raw_count: raw,
        classes,
    })
}
