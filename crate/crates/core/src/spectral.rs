//! Adjacency spectra: a cyclic Jacobi eigensolver for dense symmetric
//! matrices, graph energy, and closed-form spectra for Paley graphs and
//! rings of cliques.

use std::f64::consts::PI;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::finitefield::PrimeModulus;
use crate::graph::Graph;
use crate::tolerance;

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    /// The largest eigenvalue. Panics on an empty spectrum.
    pub fn largest(&self) -> f64 {
        self.0[0]
    }

    pub fn trace(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn square_trace(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Largest entrywise difference, or infinity when lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.iter()
            .zip(other.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Deref for Spectrum {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiConfig {
    pub off_norm_per_n: f64,
    pub max_sweeps: usize,
    pub rotation_skip: f64,
}

impl Default for JacobiConfig {
    fn default() -> Self {
        JacobiConfig {
            off_norm_per_n: tolerance::JACOBI_OFF_NORM_PER_N,
            max_sweeps: tolerance::JACOBI_MAX_SWEEPS,
            rotation_skip: tolerance::JACOBI_ROTATION_SKIP,
        }
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, by cyclic
/// Jacobi rotations. Only the values are kept.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize, config: &JacobiConfig) -> Result<Spectrum> {
    assert_eq!(a.len(), n * n, "matrix is not n x n");
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let threshold = config.off_norm_per_n * n as f64;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < threshold {
            break;
        }
        if sweeps == config.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q, config.rotation_skip);
            }
        }
    }
    Ok(Spectrum::from_unsorted((0..n).map(|i| a[i * n + i]).collect()))
}

/// Annihilates `a[p][q]` with the similarity `J^T A J`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, skip: f64) {
    let apq = a[p * n + q];
    if apq.abs() < skip {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 t theta - 1 = 0, so |angle| <= pi/4
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    eigenvalues_with(g, &JacobiConfig::default())
}

pub fn eigenvalues_with(g: &Graph, config: &JacobiConfig) -> Result<Spectrum> {
    symmetric_eigenvalues(g.adjacency_matrix(), g.n(), config)
}

pub fn energy(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g)?.energy())
}

pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g)?.largest())
}

/// Energy, spectral radius and, for k-regular graphs with k >= 1, the
/// bound `e0 = k + sqrt(k(n-1)(n-k))` and the ratio `energy / e0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub n: usize,
    pub m: usize,
    pub energy: f64,
    pub spectral_radius: f64,
    pub k: Option<usize>,
    pub e0: Option<f64>,
    pub ratio: Option<f64>,
    pub spectrum: Spectrum,
}

/// `{(p-1)/2 x1, (-1+sqrt p)/2 x(p-1)/2, (-1-sqrt p)/2 x(p-1)/2}`.
pub fn paley_spectrum_closed(m: PrimeModulus) -> Result<Spectrum> {
    let p = validate_paley(m)?;
    let half = (p - 1) / 2;
    let root = (p as f64).sqrt();
    let mut values = Vec::with_capacity(p as usize);
    values.push(half as f64);
    values.extend(std::iter::repeat_n((root - 1.0) / 2.0, half as usize));
    values.extend(std::iter::repeat_n((-1.0 - root) / 2.0, half as usize));
    Ok(Spectrum::from_unsorted(values))
}

pub(crate) fn validate_paley(m: PrimeModulus) -> Result<u64> {
    let p = m.get();
    if p < 5 {
        return Err(Error::ModulusTooSmall(p, 5));
    }
    if !m.minus_one_is_square() {
        return Err(Error::NotOneModFour(p));
    }
    Ok(p)
}

/// The ring of cliques is the Cartesian product `C_q x K_q`, so its
/// eigenvalues are `mu + 2 cos(2 pi r / q)` with `mu` in
/// `{q - 1, -1 x (q - 1)}` and `r = 0..q`.
pub fn ring_clique_spectrum_closed(q: usize) -> Result<Spectrum> {
    if q < 3 {
        return Err(Error::InvalidParameter {
            what: "ring of cliques",
            requirement: "q >= 3",
            got: q as u64,
        });
    }
    let mut values = Vec::with_capacity(q * q);
    for r in 0..q {
        let c = 2.0 * (2.0 * PI * r as f64 / q as f64).cos();
        values.push(q as f64 - 1.0 + c);
        values.extend(std::iter::repeat_n(c - 1.0, q - 1));
    }
    Ok(Spectrum::from_unsorted(values))
}
