//! Exhaustive enumeration of lattice simplices by normalized volume.
//!
//! Every `d`-simplex with a vertex at the origin is `conv(0, columns of M)`
//! for an integer matrix `M` with `|det M|` equal to its normalized volume,
//! and `M` may be replaced by `U M` for unimodular `U`. Each orbit has exactly
//! one lower-triangular representative with positive diagonal whose entries
//! below the diagonal are reduced modulo the diagonal entry of their column.
//! Enumerating those matrices lists every simplex class, possibly several
//! times (the vertex order is not normalized).

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{box_polynomial, lattice_volume, simplex_hstar};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::polynomial::IntPolynomial;
use crate::polytope::{LatticePolytope, VertexSet};
use crate::scalar::{sub_vec, Scalar};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumFlags {
    pub thin: bool,
    pub trivially_thin: bool,
    /// Some pair of complementary faces exhibits `P` as a free join; lattice
    /// pyramids are free joins with a point.
    pub free_join_found: bool,
    pub pyramid: bool,
    pub cyclic_quotient: bool,
    pub spanning: bool,
}

impl EnumFlags {
    /// Comma-separated names of the set flags, in declaration order.
    pub fn signature(&self) -> String {
        let names = [
            (self.thin, "thin"),
            (self.trivially_thin, "trivially_thin"),
            (self.free_join_found, "free_join_found"),
            (self.pyramid, "pyramid"),
            (self.cyclic_quotient, "cyclic_quotient"),
            (self.spanning, "spanning"),
        ];
        let set: Vec<&str> = names
            .iter()
            .filter(|(on, _)| *on)
            .map(|(_, n)| *n)
            .collect();
        if set.is_empty() {
            "none".to_string()
        } else {
            set.join(",")
        }
    }

    /// Implications that hold for every lattice simplex.
    pub fn consistent(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        implies(self.pyramid, self.thin)
            && implies(self.pyramid, self.free_join_found)
            && implies(self.trivially_thin, self.thin)
            && implies(self.cyclic_quotient, self.thin == self.pyramid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct EnumRecord<T: Scalar> {
    pub schema: u32,
    pub dim: usize,
    #[serde(with = "crate::io::int")]
    pub volume: T,
    /// Rows of the canonical matrix whose columns are the nonzero vertices;
    /// absent for simplices supplied from elsewhere.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "optional_points"
    )]
    pub hnf_matrix: Option<Vec<Vec<T>>>,
    #[serde(with = "crate::io::points")]
    pub vertices: Vec<Vec<T>>,
    pub flags: EnumFlags,
    pub hstar: IntPolynomial<T>,
    pub lstar: IntPolynomial<T>,
    #[serde(with = "crate::io::int")]
    pub spanning_index: T,
    /// For thin records without a trivial or free-join explanation that do
    /// not span the lattice: whether the polytope, viewed in the lattice
    /// spanned by its lattice points, is trivially thin or a free join.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sublattice_resolved: Option<bool>,
}

mod optional_points {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::scalar::Scalar;

    #[derive(Serialize, Deserialize)]
    #[serde(bound = "")]
    struct Wrap<T: Scalar>(#[serde(with = "crate::io::points")] Vec<Vec<T>>);

    pub fn serialize<T: Scalar, S: Serializer>(
        v: &Option<Vec<Vec<T>>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|x| Wrap(x.clone())).serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Vec<Vec<T>>>, D::Error> {
        Ok(Option::<Wrap<T>>::deserialize(d)?.map(|w| w.0))
    }
}

impl<T: Scalar> EnumRecord<T> {
    pub fn polytope(&self) -> Result<LatticePolytope<T>> {
        LatticePolytope::new(self.vertices.clone())
    }

    /// Explained as trivially thin, as a free join, or after passing to the
    /// lattice spanned by its lattice points.
    pub fn is_resolved(&self) -> bool {
        self.flags.trivially_thin
            || self.flags.free_join_found
            || self.sublattice_resolved == Some(true)
    }
}

/// Ordered factorizations of `v` into `k` positive factors, lexicographically.
fn factorizations(v: u64, k: usize) -> Vec<Vec<u64>> {
    if k == 0 {
        return if v == 1 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for a in (1..=v).filter(|a| v.is_multiple_of(*a)) {
        for mut rest in factorizations(v / a, k - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Number of canonical matrices of size `d` and determinant `volume`.
pub fn hnf_count(d: usize, volume: u64) -> u64 {
    factorizations(volume, d)
        .iter()
        .map(|diag| {
            diag.iter()
                .enumerate()
                .map(|(j, &x)| x.pow((d - 1 - j) as u32))
                .product::<u64>()
        })
        .sum()
}

/// All canonical lower-triangular matrices of size `d` and determinant
/// `volume`: by diagonal (lexicographically), then by the below-diagonal
/// entries column by column.
pub fn hnf_matrices<T: Scalar>(d: usize, volume: u64) -> Vec<IntMatrix<T>> {
    let mut out = Vec::new();
    for diag in factorizations(volume, d) {
        let slots: Vec<(usize, usize)> = (0..d)
            .flat_map(|j| (j + 1..d).map(move |k| (k, j)))
            .collect();
        let mut vals = vec![0u64; slots.len()];
        loop {
            let mut m = IntMatrix::zeros(d, d);
            for (j, &x) in diag.iter().enumerate() {
                m[(j, j)] = T::from_int(x as i64);
            }
            for (&(k, j), &x) in slots.iter().zip(&vals) {
                m[(k, j)] = T::from_int(x as i64);
            }
            out.push(m);
            let mut pos = slots.len();
            let done = loop {
                if pos == 0 {
                    break true;
                }
                pos -= 1;
                vals[pos] += 1;
                if vals[pos] < diag[slots[pos].1] {
                    break false;
                }
                vals[pos] = 0;
            };
            if done {
                break;
            }
        }
    }
    out
}

/// `conv(0, columns of m)`.
pub fn simplex_from_hnf<T: Scalar>(m: &IntMatrix<T>) -> LatticePolytope<T> {
    let d = m.rows();
    let mut pts = vec![vec![T::zero(); d]];
    pts.extend(m.to_columns());
    LatticePolytope::new(pts).expect("nonsingular matrix gives a simplex")
}

/// Free join test for simplices: the join of complementary faces `F`, `G`
/// is free exactly when `vol P = vol F · vol G`.
fn simplex_free_join<T: Scalar>(s: &LatticePolytope<T>) -> bool {
    let n = s.num_vertices();
    let vol = lattice_volume(s);
    let mut face_vol: BTreeMap<VertexSet, T> = BTreeMap::new();
    let mut volume_of = |set: VertexSet| -> T {
        face_vol
            .entry(set)
            .or_insert_with(|| lattice_volume(&s.face_polytope(set).expect("nonempty face")))
            .clone()
    };
    let all = s.all_vertices();
    // Subsets containing vertex 0 cover every unordered pair once.
    (1u128..(1u128 << (n - 1))).any(|bits| {
        let f = VertexSet::from_indices((0..n - 1).filter(|i| bits >> i & 1 == 1).map(|i| i + 1));
        let g = all.difference(f);
        volume_of(f) * volume_of(g) == vol
    })
}

fn degree_bound_holds<T: Scalar>(dim: usize, hstar: &IntPolynomial<T>) -> bool {
    dim >= 2 * hstar.degree()
}

/// Fully classifies a lattice simplex. `hnf_matrix` is recorded as given.
pub fn classify_simplex<T: Scalar>(
    s: &LatticePolytope<T>,
    hnf_matrix: Option<&IntMatrix<T>>,
) -> Result<EnumRecord<T>> {
    s.require_simplex()?;
    let d = s.dim();
    let hstar = simplex_hstar(s)?.hstar;
    let lstar = box_polynomial(s)?;
    let thin = lstar.is_zero();
    let trivially_thin = degree_bound_holds(d, &hstar);
    let pyramid = s.is_lattice_pyramid();
    let free_join_found = pyramid || simplex_free_join(s);
    let cyclic_quotient = s.quotient_group()?.cyclic;
    let spanning_index = s.spanning_index();
    let spanning = spanning_index.is_one();
    let flags = EnumFlags {
        thin,
        trivially_thin,
        free_join_found,
        pyramid,
        cyclic_quotient,
        spanning,
    };
    if !flags.consistent() {
        return Err(Error::InternalConsistency(format!(
            "inconsistent flags {} for {:?}",
            flags.signature(),
            s.ambient_vertices()
        )));
    }
    let sublattice_resolved = if thin && !trivially_thin && !free_join_found && !spanning {
        let view = s.spanning_view();
        let view_hstar = simplex_hstar(&view)?.hstar;
        Some(
            degree_bound_holds(d, &view_hstar)
                || view.is_lattice_pyramid()
                || simplex_free_join(&view),
        )
    } else {
        None
    };
    Ok(EnumRecord {
        schema: SCHEMA_VERSION,
        dim: d,
        volume: hstar.at_one(),
        hnf_matrix: hnf_matrix.map(|m| m.to_rows()),
        vertices: s.ambient_vertices(),
        flags,
        hstar,
        lstar,
        spanning_index,
        sublattice_resolved,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Keep only the first record of each unimodular equivalence class
    /// within a volume bucket.
    pub dedup_iso: bool,
}

/// Classified records of one volume bucket, in canonical order.
pub fn enumerate_volume<T: Scalar>(
    d: usize,
    volume: u64,
    opts: EnumOptions,
) -> Result<Vec<EnumRecord<T>>> {
    let records: Vec<EnumRecord<T>> = hnf_matrices::<T>(d, volume)
        .par_iter()
        .map(|m| classify_simplex(&simplex_from_hnf(m), Some(m)))
        .collect::<Result<_>>()?;
    if !opts.dedup_iso {
        return Ok(records);
    }
    let mut kept: Vec<(EnumRecord<T>, LatticePolytope<T>)> = Vec::new();
    for r in records {
        let p = r.polytope()?;
        let duplicate = kept.iter().any(|(k, q)| {
            k.hstar == r.hstar && k.lstar == r.lstar && q.is_unimodularly_equivalent(&p)
        });
        if !duplicate {
            kept.push((r, p));
        }
    }
    Ok(kept.into_iter().map(|(r, _)| r).collect())
}

/// Streams every `d`-simplex of volume `1..=max_volume` to `sink`, bucket by
/// bucket.
pub fn enumerate_simplices_with<T: Scalar>(
    d: usize,
    max_volume: u64,
    opts: EnumOptions,
    mut sink: impl FnMut(u64, &[EnumRecord<T>]) -> Result<()>,
) -> Result<()> {
    if d < 2 || max_volume < 1 {
        return Err(Error::Invalid(format!(
            "enumeration needs dim >= 2 and volume >= 1, got {d} and {max_volume}"
        )));
    }
    for v in 1..=max_volume {
        sink(v, &enumerate_volume(d, v, opts)?)?;
    }
    Ok(())
}

pub fn enumerate_simplices<T: Scalar>(
    d: usize,
    max_volume: u64,
    opts: EnumOptions,
) -> Result<Vec<EnumRecord<T>>> {
    let mut out = Vec::new();
    enumerate_simplices_with(d, max_volume, opts, |_, rs| {
        out.extend_from_slice(rs);
        Ok(())
    })?;
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LogSummary {
    /// Volumes already complete in the log before this run.
    pub resumed_volumes: Vec<u64>,
    pub computed_volumes: Vec<u64>,
    pub records: usize,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Invalid(format!("i/o error: {e}"))
}

/// Appends the enumeration to a JSONL log, one record per line.
///
/// With `resume`, complete volume buckets already present in the log are
/// kept and enumeration continues after them. The last bucket in the log is
/// recomputed unless its record count proves it complete; a torn final line
/// is discarded.
pub fn enumerate_to_log<T: Scalar>(
    path: &Path,
    d: usize,
    max_volume: u64,
    opts: EnumOptions,
    resume: bool,
) -> Result<LogSummary> {
    let mut summary = LogSummary::default();
    let mut start = 1;
    let mut keep_bytes = 0u64;
    if resume && path.exists() {
        let (complete, bytes, count) = complete_prefix::<T>(path, d, opts)?;
        summary.resumed_volumes = complete
            .iter()
            .copied()
            .filter(|&v| v <= max_volume)
            .collect();
        start = complete.last().map_or(1, |v| v + 1);
        keep_bytes = bytes;
        summary.records = count;
    }
    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .truncate(false)
        .open(path)
        .map_err(io_err)?;
    file.set_len(keep_bytes).map_err(io_err)?;
    let mut file = file;
    file.seek(SeekFrom::End(0)).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    for v in start..=max_volume {
        let records = enumerate_volume::<T>(d, v, opts)?;
        for r in &records {
            serde_json::to_writer(&mut w, r).map_err(|e| Error::Invalid(e.to_string()))?;
            w.write_all(b"\n").map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
        summary.records += records.len();
        summary.computed_volumes.push(v);
    }
    Ok(summary)
}

/// Complete leading volume buckets of a log, the byte length they occupy
/// and their record count.
fn complete_prefix<T: Scalar>(
    path: &Path,
    d: usize,
    opts: EnumOptions,
) -> Result<(Vec<u64>, u64, usize)> {
    let reader = BufReader::new(File::open(path).map_err(io_err)?);
    let mut buckets: Vec<(u64, u64, usize)> = Vec::new(); // (volume, end byte, count)
    let mut offset = 0u64;
    for line in reader.split(b'\n') {
        let line = line.map_err(io_err)?;
        let Ok(r) = serde_json::from_slice::<EnumRecord<T>>(&line) else {
            break;
        };
        if r.dim != d {
            return Err(Error::Invalid(format!(
                "log holds dimension {} records, expected {d}",
                r.dim
            )));
        }
        offset += line.len() as u64 + 1;
        let v = r
            .volume
            .to_u64()
            .ok_or_else(|| Error::Invalid("volume out of range".into()))?;
        match buckets.last_mut() {
            Some(b) if b.0 == v => {
                b.1 = offset;
                b.2 += 1;
            }
            _ => buckets.push((v, offset, 1)),
        }
    }
    if let Some(&(v, _, n)) = buckets.last() {
        if opts.dedup_iso || n as u64 != hnf_count(d, v) {
            buckets.pop();
        }
    }
    let end = buckets.last().map_or(0, |b| b.1);
    let count = buckets.iter().map(|b| b.2).sum();
    Ok((buckets.iter().map(|b| b.0).collect(), end, count))
}

pub fn read_log<T: Scalar>(path: &Path) -> Result<Vec<EnumRecord<T>>> {
    let reader = BufReader::new(File::open(path).map_err(io_err)?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(&line)
            .map_err(|e| Error::Invalid(format!("line {}: {e}", i + 1)))?;
        out.push(r);
    }
    Ok(out)
}

/// Thin records by the explanation they admit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Question1Report<T: Scalar> {
    pub total: usize,
    pub thin: usize,
    /// Record count per flag signature.
    pub flag_counts: BTreeMap<String, usize>,
    pub trivially_thin: usize,
    /// Thin, not trivially thin, with a free-join or pyramid witness.
    pub free_join: usize,
    /// Thin records explained only in the lattice spanned by their lattice
    /// points.
    pub nonspanning_resolution: Vec<EnumRecord<T>>,
    /// Thin records with no explanation: candidate counterexamples.
    pub unresolved: Vec<EnumRecord<T>>,
}

pub fn question1_scan<'a, T: Scalar>(
    records: impl IntoIterator<Item = &'a EnumRecord<T>>,
) -> Question1Report<T> {
    let mut report = Question1Report {
        total: 0,
        thin: 0,
        flag_counts: BTreeMap::new(),
        trivially_thin: 0,
        free_join: 0,
        nonspanning_resolution: Vec::new(),
        unresolved: Vec::new(),
    };
    for r in records {
        report.total += 1;
        *report.flag_counts.entry(r.flags.signature()).or_default() += 1;
        if !r.flags.thin {
            continue;
        }
        report.thin += 1;
        if r.flags.trivially_thin {
            report.trivially_thin += 1;
        } else if r.flags.free_join_found {
            report.free_join += 1;
        } else if r.sublattice_resolved == Some(true) {
            report.nonspanning_resolution.push(r.clone());
        } else {
            report.unresolved.push(r.clone());
        }
    }
    report
}

/// Translates a simplex so its first vertex is the origin; the edge
/// vectors as columns.
pub fn edge_matrix<T: Scalar>(s: &LatticePolytope<T>) -> Result<IntMatrix<T>> {
    s.require_simplex()?;
    let v0 = s.vertex(0).to_vec();
    let cols: Vec<Vec<T>> = s.vertices()[1..].iter().map(|v| sub_vec(v, &v0)).collect();
    IntMatrix::from_columns(&cols, s.dim())
}
