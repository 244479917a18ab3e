//! Oriented Cayley graphs, their skew walk operator U(t) = e^{tS}, and the
//! uniform-mixing checks.
//!
//! Three independent routes decide whether U(τ) is flat. The exact route
//! works per character in ℤ[i]: at dyadic multiples of π every phase is a
//! power of i, so the mixing identity becomes a Gaussian-integer equation.
//! The spectral route rebuilds U(τ) entries from the character sum over
//! classes. The dense route exponentiates the skew matrix directly and
//! serves as the oracle for the other two.

use crate::chartable::CharacterTable;
use crate::dense;
use crate::gaussian::{GaussianInt, GI_ZERO};
use crate::group::{ConnectionSet, GroupError, SuzukiGroup};
use ndarray::Array2;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use thiserror::Error;

/// Dense matrices (exponentials, Hadamard extraction) stop here.
pub const MAX_DENSE_DIM: usize = 4096;
/// The Jacobi eigendecomposition embeds into 2·dim, so it stops earlier.
pub const MAX_EIGEN_DIM: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("use spectral method")]
    DenseTooLarge,
    #[error("phase not exactly representable")]
    PhaseNotRepresentable,
    #[error("not flat")]
    NotFlat,
    #[error("rounding residual too large")]
    RoundingResidual,
    #[error("not Hadamard")]
    NotHadamard,
    #[error("dense eigendecomposition limited to dimension {MAX_EIGEN_DIM}")]
    EigenTooLarge,
    #[error("arc list is not an orientation: {reason}")]
    NotOriented { reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A walk time. Dyadic times num·π/2^pow2 carry their exact form so the
/// character-side check can stay in ℤ[i]; plain decimals route to the
/// numeric methods only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tau {
    pub dyadic: Option<(i64, u32)>,
    pub value: f64,
}

impl Tau {
    pub fn dyadic(num: i64, pow2: u32) -> Tau {
        Tau {
            dyadic: Some((num, pow2)),
            value: num as f64 * PI / f64::powi(2.0, pow2 as i32),
        }
    }

    pub fn decimal(value: f64) -> Tau {
        Tau { dyadic: None, value }
    }

    /// τ = π/2^{n+1}, the uniform-mixing time of A(n, θ).
    pub fn mixing_time(n: u32) -> Tau {
        Tau::dyadic(1, n + 1)
    }

    pub fn describe(&self) -> TauDesc {
        TauDesc {
            symbolic: self.dyadic.map(|(num, pow2)| match (num, pow2) {
                (1, 0) => "pi".to_string(),
                (1, p) => format!("pi/2^{p}"),
                (k, 0) => format!("{k}*pi"),
                (k, p) => format!("{k}*pi/2^{p}"),
            }),
            decimal: self.value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauDesc {
    pub symbolic: Option<String>,
    pub decimal: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Spectral,
    Dense,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Exact => write!(f, "exact"),
            Method::Spectral => write!(f, "spectral"),
            Method::Dense => write!(f, "dense"),
        }
    }
}

/// Outcome of one verification route.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingReport {
    pub dim: usize,
    pub tau: TauDesc,
    pub method: Method,
    pub is_uniform: bool,
    /// |G|^{-1/2}, the common modulus a flat operator must have.
    pub target_modulus: f64,
    /// Numeric methods only; the exact route has no residual.
    pub max_modulus_deviation: Option<f64>,
    pub sign_vector: Vec<i8>,
    pub detail: MethodDetail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodDetail {
    /// One boolean per character: does 2^n·χ_r(1)·e^{τθ_r} equal
    /// Σ_j t_j·|K_j|·χ_r(K_j) in ℤ[i].
    Exact { identities: Vec<bool> },
    /// |U(τ)| entry modulus per class of h·g^{-1}; covers every matrix
    /// entry without materializing the matrix.
    Spectral { class_moduli: Vec<f64> },
    Dense,
}

/// An oriented graph with arcs u → v, vertex-transitive by construction
/// here: either Cay(G, C) for a Suzuki group or a Cartesian product of such
/// graphs. `normal` records whether the connection set is a union of
/// conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCayley {
    dim: usize,
    out: Vec<Vec<u32>>,
    normal: bool,
    sign_vector: Option<Vec<i8>>,
}

impl OrientedCayley {
    /// Cay(G, C) with an arc g → cg per c ∈ C, vertices in canonical element
    /// order. Dense-scale only.
    pub fn from_suzuki(group: &SuzukiGroup, conn: &ConnectionSet) -> Result<OrientedCayley, WalkError> {
        let dim = group.order() as usize;
        if dim > MAX_DENSE_DIM {
            return Err(WalkError::DenseTooLarge);
        }
        let members = conn.elements(group);
        let out: Vec<Vec<u32>> = (0..dim as u64)
            .map(|u| {
                let gu = group.element_at(u);
                let mut row: Vec<u32> = members
                    .iter()
                    .map(|&c| group.idx(group.g_mul(c, gu)) as u32)
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        let graph = OrientedCayley {
            dim,
            out,
            normal: true,
            sign_vector: Some(sign_vector(group, conn)),
        };
        graph.check_oriented()?;
        Ok(graph)
    }

    /// Explicit arc list; for generic oriented graphs in tests and products.
    pub fn from_arcs(dim: usize, arcs: &[(u32, u32)], normal: bool) -> Result<OrientedCayley, WalkError> {
        let mut out = vec![Vec::new(); dim];
        for &(u, v) in arcs {
            if u as usize >= dim || v as usize >= dim {
                return Err(WalkError::NotOriented {
                    reason: format!("arc ({u}, {v}) out of range"),
                });
            }
            out[u as usize].push(v);
        }
        for row in &mut out {
            row.sort_unstable();
        }
        let graph = OrientedCayley {
            dim,
            out,
            normal,
            sign_vector: None,
        };
        graph.check_oriented()?;
        Ok(graph)
    }

    /// The one-vertex graph, the unit for Cartesian products.
    pub fn trivial() -> OrientedCayley {
        OrientedCayley {
            dim: 1,
            out: vec![Vec::new()],
            normal: true,
            sign_vector: None,
        }
    }

    fn check_oriented(&self) -> Result<(), WalkError> {
        for u in 0..self.dim {
            let row = &self.out[u];
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(WalkError::NotOriented {
                    reason: format!("duplicate arc from {u}"),
                });
            }
            for &v in row {
                if v as usize == u {
                    return Err(WalkError::NotOriented {
                        reason: format!("self arc at {u}"),
                    });
                }
                if self.has_arc(v as usize, u) {
                    return Err(WalkError::NotOriented {
                        reason: format!("both directions between {u} and {v}"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn out_neighbors(&self, u: usize) -> &[u32] {
        &self.out[u]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// The per-class ±1 vector when the graph came from a connection set.
    pub fn class_signs(&self) -> Option<&[i8]> {
        self.sign_vector.as_deref()
    }
}

/// Vertex set = pairs (ordered x-major); arcs act on one coordinate at a
/// time, so the skew matrices satisfy S = S_X ⊗ I + I ⊗ S_Y.
pub fn cartesian_product(x: &OrientedCayley, y: &OrientedCayley) -> OrientedCayley {
    let dim = x.dim * y.dim;
    let mut out = vec![Vec::new(); dim];
    for u in 0..x.dim {
        for &v in &x.out[u] {
            for b in 0..y.dim {
                out[u * y.dim + b].push((v as usize * y.dim + b) as u32);
            }
        }
    }
    for b in 0..y.dim {
        for &c in &y.out[b] {
            for u in 0..x.dim {
                out[u * y.dim + b].push((u * y.dim + c as usize) as u32);
            }
        }
    }
    for row in &mut out {
        row.sort_unstable();
    }
    OrientedCayley {
        dim,
        out,
        normal: x.normal && y.normal,
        sign_vector: None,
    }
}

/// Whether |vertices| is an even perfect square, the necessary condition
/// for an oriented graph to mix uniformly.
pub fn perfect_square_check(x: &OrientedCayley) -> bool {
    let order = x.dim as u64;
    order.is_multiple_of(2) && {
        let r = integer_sqrt(order);
        r * r == order
    }
}

fn integer_sqrt(v: u64) -> u64 {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// The skew adjacency matrix: +1 for an arc u → v, −1 for the reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    dim: usize,
    entries: Vec<i8>,
}

impl SkewMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, u: usize, v: usize) -> i8 {
        self.entries[u * self.dim + v]
    }

    pub fn to_dense(&self) -> Array2<f64> {
        Array2::from_shape_fn((self.dim, self.dim), |(u, v)| self.entry(u, v) as f64)
    }

    /// Nonzero entries as (u, v, ±1), row-major; the export format.
    pub fn triples(&self) -> impl Iterator<Item = (u32, u32, i8)> + '_ {
        (0..self.dim).flat_map(move |u| {
            (0..self.dim).filter_map(move |v| {
                let s = self.entry(u, v);
                (s != 0).then_some((u as u32, v as u32, s))
            })
        })
    }
}

pub fn skew_matrix(x: &OrientedCayley) -> SkewMatrix {
    let dim = x.dim();
    let mut entries = vec![0i8; dim * dim];
    for u in 0..dim {
        for &v in x.out_neighbors(u) {
            entries[u * dim + v as usize] = 1;
            entries[v as usize * dim + u] = -1;
        }
    }
    SkewMatrix { dim, entries }
}

/// t_j per class: +1 for central classes and classes inside C, −1 for
/// classes inside C^{(−1)}.
pub fn sign_vector(group: &SuzukiGroup, conn: &ConnectionSet) -> Vec<i8> {
    group
        .classes()
        .iter()
        .map(|c| {
            if c.is_central || conn.contains_class(c.id) {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// One eigenvalue record per character: θ_r = μ_r·i with multiplicity
/// χ_r(1)².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralLine {
    pub char_id: u32,
    pub mu: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub lines: Vec<SpectralLine>,
    pub dim: u64,
}

impl Spectrum {
    /// Total multiplicity per μ.
    pub fn tally(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for line in &self.lines {
            *out.entry(line.mu).or_insert(0) += line.multiplicity;
        }
        out
    }
}

/// θ_r = (χ_r(C) − χ_r(C^{(−1)}))/χ_r(1), exactly. Purely imaginary for
/// every character since C and C^{(−1)} are disjoint conjugate-closed sets.
pub fn eigenvalues(table: &CharacterTable<'_>, conn: &ConnectionSet) -> Spectrum {
    let group = table.group();
    let lines: Vec<SpectralLine> = table
        .characters()
        .par_iter()
        .map(|ch| {
            let mut num = GI_ZERO;
            for &j in &conn.class_ids {
                let class = group.class(j);
                let inv = class.inverse_class_id;
                num += (table.value(ch.id, j) - table.value(ch.id, inv)) * class.size as i64;
            }
            let theta = num
                .div_exact(ch.degree as i64)
                .expect("class-sum eigenvalues are Gaussian integers");
            assert_eq!(theta.re, 0, "oriented graph eigenvalues are imaginary");
            SpectralLine {
                char_id: ch.id,
                mu: theta.im,
                multiplicity: ch.degree * ch.degree,
            }
        })
        .collect();
    let spectrum = Spectrum {
        lines,
        dim: group.order(),
    };
    debug_assert_eq!(
        spectrum.lines.iter().map(|l| l.multiplicity).sum::<u64>(),
        group.order()
    );
    spectrum
}

/// The exact mixing check at τ = num·π/2^pow2: per character, the identity
/// 2^n·χ_r(1)·e^{τθ_r} = Σ_j t_j·|K_j|·χ_r(K_j), both sides in ℤ[i]
/// (the usual form divides by χ_r(1); multiplying through avoids division).
/// Every phase e^{τθ_r} must land in {1, i, −1, −i}, which requires
/// 2·num·μ_r ≡ 0 mod 2^pow2; otherwise the time is not on the exact grid
/// and the caller must use a numeric method.
pub fn verify_um_exact(
    table: &CharacterTable<'_>,
    conn: &ConnectionSet,
    tau_numerator: i64,
    tau_denominator_pow2: u32,
) -> Result<MixingReport, WalkError> {
    let group = table.group();
    let n = group.n();
    let order = group.order();
    let signs = sign_vector(group, conn);
    let spectrum = eigenvalues(table, conn);
    let sqrt_order = 1i64 << n;

    let identities: Vec<bool> = table
        .characters()
        .par_iter()
        .map(|ch| {
            let mu = spectrum.lines[ch.id as usize].mu;
            let twice = 2 * tau_numerator * mu;
            let denom = 1i64 << tau_denominator_pow2;
            if twice % denom != 0 {
                return Err(WalkError::PhaseNotRepresentable);
            }
            let phase = GaussianInt::i_pow(twice / denom);
            let lhs = phase * (sqrt_order * ch.degree as i64);
            let mut rhs = GI_ZERO;
            for (j, class) in group.classes().iter().enumerate() {
                let term = table.value(ch.id, j as u32) * (class.size as i64 * signs[j] as i64);
                rhs += term;
            }
            Ok(lhs == rhs)
        })
        .collect::<Result<_, _>>()?;

    let is_uniform = identities.iter().all(|&ok| ok);
    Ok(MixingReport {
        dim: order as usize,
        tau: Tau::dyadic(tau_numerator, tau_denominator_pow2).describe(),
        method: Method::Exact,
        is_uniform,
        target_modulus: 1.0 / (order as f64).sqrt(),
        max_modulus_deviation: None,
        sign_vector: signs,
        detail: MethodDetail::Exact { identities },
    })
}

/// U(τ) = e^{τS} by dense scaling-and-squaring.
pub fn evolve_dense(s: &SkewMatrix, tau: f64) -> Result<Array2<f64>, WalkError> {
    if s.dim() > MAX_DENSE_DIM {
        return Err(WalkError::DenseTooLarge);
    }
    let b = s.to_dense() * tau;
    Ok(dense::expm(b.view()))
}

/// U(τ) reconstructed from characters: entry (g, h) equals
/// (1/|G|)·Σ_r χ_r(1)·e^{τθ_r}·χ_r(g·h^{-1}), so it depends only on the
/// class of g·h^{-1} and the whole operator is k class values. The g·h^{-1}
/// orientation (not h·g^{-1}) is the variant that reproduces the dense
/// exponential; the oracle tests pin it.
pub struct SpectralOperator<'g> {
    group: &'g SuzukiGroup,
    class_values: Vec<Complex64>,
}

pub fn evolve_spectral<'g>(
    table: &CharacterTable<'g>,
    conn: &ConnectionSet,
    tau: f64,
) -> SpectralOperator<'g> {
    let group = table.group();
    let spectrum = eigenvalues(table, conn);
    let phases: Vec<Complex64> = spectrum
        .lines
        .iter()
        .map(|line| Complex64::new(0.0, tau * line.mu as f64).exp())
        .collect();
    let order = group.order() as f64;
    let class_values: Vec<Complex64> = (0..group.class_count() as u32)
        .into_par_iter()
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for ch in table.characters() {
                acc += table.value(ch.id, j).to_complex() * phases[ch.id as usize]
                    * ch.degree as f64;
            }
            acc / order
        })
        .collect();
    SpectralOperator {
        group,
        class_values,
    }
}

impl SpectralOperator<'_> {
    pub fn dim(&self) -> usize {
        self.group.order() as usize
    }

    pub fn class_values(&self) -> &[Complex64] {
        &self.class_values
    }

    /// O(k)-free single-entry query: one group operation and a class lookup.
    pub fn entry(&self, u: u64, v: u64) -> Complex64 {
        let g = self.group.element_at(u);
        let h = self.group.element_at(v);
        let d = self.group.g_mul(g, self.group.g_inv(h));
        self.class_values[self.group.class_id_of(d) as usize]
    }

    /// Materializes the real matrix; U(τ) is real for real skew S, and the
    /// reconstruction's imaginary parts vanish to rounding.
    pub fn to_matrix(&self) -> Result<Array2<f64>, WalkError> {
        let dim = self.dim();
        if dim > MAX_DENSE_DIM {
            return Err(WalkError::DenseTooLarge);
        }
        let mut out = Array2::zeros((dim, dim));
        for u in 0..dim {
            for v in 0..dim {
                let z = self.entry(u as u64, v as u64);
                debug_assert!(z.im.abs() < 1e-9);
                out[[u, v]] = z.re;
            }
        }
        Ok(out)
    }
}

/// Flatness tolerance by problem size.
pub fn flat_tolerance(dim: usize) -> f64 {
    if dim <= 64 {
        1e-10
    } else {
        1e-9
    }
}

/// Numeric mixing check via the spectral route: flat iff every class value
/// has modulus |G|^{-1/2}.
pub fn verify_um_spectral<'g>(
    table: &CharacterTable<'g>,
    conn: &ConnectionSet,
    tau: Tau,
) -> (MixingReport, SpectralOperator<'g>) {
    let group = table.group();
    let op = evolve_spectral(table, conn, tau.value);
    let target = 1.0 / (group.order() as f64).sqrt();
    let moduli: Vec<f64> = op.class_values().iter().map(|z| z.norm()).collect();
    let deviation = moduli
        .iter()
        .map(|m| (m - target).abs())
        .fold(0.0f64, f64::max);
    let report = MixingReport {
        dim: op.dim(),
        tau: tau.describe(),
        method: Method::Spectral,
        is_uniform: deviation <= flat_tolerance(op.dim()),
        target_modulus: target,
        max_modulus_deviation: Some(deviation),
        sign_vector: sign_vector(group, conn),
        detail: MethodDetail::Spectral { class_moduli: moduli },
    };
    (report, op)
}

/// Numeric mixing check via the dense route. Returns the operator too so
/// callers can extract the Hadamard matrix without re-exponentiating.
pub fn verify_um_dense(
    x: &OrientedCayley,
    tau: Tau,
) -> Result<(MixingReport, Array2<f64>), WalkError> {
    let s = skew_matrix(x);
    let u = evolve_dense(&s, tau.value)?;
    let target = 1.0 / (x.dim() as f64).sqrt();
    let deviation = u
        .iter()
        .map(|e| (e.abs() - target).abs())
        .fold(0.0f64, f64::max);
    let report = MixingReport {
        dim: x.dim(),
        tau: tau.describe(),
        method: Method::Dense,
        is_uniform: deviation <= flat_tolerance(x.dim()),
        target_modulus: target,
        max_modulus_deviation: Some(deviation),
        sign_vector: x.class_signs().map(<[i8]>::to_vec).unwrap_or_default(),
        detail: MethodDetail::Dense,
    };
    Ok((report, u))
}

/// A ±1 matrix with H·Hᵀ = dim·I, verified exactly on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    dim: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, u: usize, v: usize) -> i8 {
        self.entries[u * self.dim + v]
    }

    pub fn row(&self, u: usize) -> &[i8] {
        &self.entries[u * self.dim..(u + 1) * self.dim]
    }

    /// Exact integer check of H·Hᵀ = dim·I.
    pub fn verify(&self) -> bool {
        let dim = self.dim;
        (0..dim).into_par_iter().all(|u| {
            (u..dim).all(|v| {
                let dot: i64 = self.row(u)
                    .iter()
                    .zip(self.row(v))
                    .map(|(&a, &b)| a as i64 * b as i64)
                    .sum();
                dot == if u == v { dim as i64 } else { 0 }
            })
        })
    }
}

/// Rounds √dim·U to ±1 and verifies the Hadamard property exactly. The
/// input must already be flat to the numeric tolerance; the rounding
/// residual bound is far looser than the flatness bound, so it only trips
/// on genuinely broken input.
pub fn extract_hadamard(u: &Array2<f64>) -> Result<HadamardMatrix, WalkError> {
    let dim = u.nrows();
    assert_eq!(dim, u.ncols());
    let target = 1.0 / (dim as f64).sqrt();
    let tol = flat_tolerance(dim);
    let deviation = u
        .iter()
        .map(|e| (e.abs() - target).abs())
        .fold(0.0f64, f64::max);
    if deviation > tol {
        return Err(WalkError::NotFlat);
    }

    let scale = (dim as f64).sqrt();
    let mut entries = Vec::with_capacity(dim * dim);
    for &e in u.iter() {
        let scaled = e * scale;
        let rounded = scaled.round();
        if (scaled - rounded).abs() >= 1e-6 || rounded.abs() != 1.0 {
            return Err(WalkError::RoundingResidual);
        }
        entries.push(rounded as i8);
    }
    let h = HadamardMatrix { dim, entries };
    if !h.verify() {
        return Err(WalkError::NotHadamard);
    }
    Ok(h)
}

/// The exact class-sum identity √|G|·U(τ) = Σ_j t_j·K_j: entry (g, h) of
/// the right side is t at the class of h·g^{-1} (h·g^{-1} ∈ K_j means h is
/// reached from g by an arc of class j).
pub fn hadamard_matches_class_sums(
    h: &HadamardMatrix,
    group: &SuzukiGroup,
    conn: &ConnectionSet,
) -> bool {
    if h.dim() as u64 != group.order() {
        return false;
    }
    let signs = sign_vector(group, conn);
    (0..h.dim()).into_par_iter().all(|u| {
        let gu_inv = group.g_inv(group.element_at(u as u64));
        (0..h.dim()).all(|v| {
            let d = group.g_mul(group.element_at(v as u64), gu_inv);
            h.entry(u, v) as i64 == signs[group.class_id_of(d) as usize] as i64
        })
    })
}

/// Eigenvalues of the Hermitian iS via the real symmetric embedding
/// [[0, −S], [S, 0]], whose spectrum is that of iS with every multiplicity
/// doubled. Ascending; length 2·dim.
pub fn dense_spectrum_of_i_s(s: &SkewMatrix) -> Result<Vec<f64>, WalkError> {
    let dim = s.dim();
    if dim > MAX_EIGEN_DIM {
        return Err(WalkError::EigenTooLarge);
    }
    let mut m = Array2::<f64>::zeros((2 * dim, 2 * dim));
    for u in 0..dim {
        for v in 0..dim {
            let e = s.entry(u, v) as f64;
            m[[u, dim + v]] = -e;
            m[[dim + u, v]] = e;
        }
    }
    Ok(dense::symmetric_eigenvalues(m))
}
