//! The regular-graph energy bound `e0(n, k) = k + sqrt(k(n-1)(n-k))`,
//! the edge-deletion inequality `E(G) <= E(G - e) + 2`, closed-form
//! energies and ratios for Paley graphs and rings of cliques, and the
//! ratio sweeps over both families.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finitefield::PrimeModulus;
use crate::graph::{Edge, Graph};
use crate::spectral::{self, validate_paley, EnergyReport};
use crate::tolerance;

pub fn e0(n: usize, k: usize) -> Result<f64> {
    if n == 0 || k >= n {
        return Err(Error::DegreeOutOfRange { n, k });
    }
    let (n, k) = (n as f64, k as f64);
    Ok(k + (k * (n - 1.0) * (n - k)).sqrt())
}

/// Energy report for any graph. `e0` and `ratio` are filled in when the
/// graph is k-regular with k >= 1.
pub fn energy_report(g: &Graph) -> Result<EnergyReport> {
    let spectrum = spectral::eigenvalues(g)?;
    let energy = spectrum.energy();
    let k = g.regularity();
    let (e0, ratio) = match k {
        Some(k) if k >= 1 => {
            let e0 = e0(g.n(), k)?;
            (Some(e0), Some(energy / e0))
        }
        _ => (None, None),
    };
    Ok(EnergyReport {
        n: g.n(),
        m: g.m(),
        energy,
        spectral_radius: spectrum.largest(),
        k,
        e0,
        ratio,
        spectrum,
    })
}

/// Like [`energy_report`], but insists on a k-regular graph with k >= 1.
pub fn energy_ratio(g: &Graph) -> Result<EnergyReport> {
    match g.regularity() {
        None => Err(Error::NotRegular),
        Some(0) => Err(Error::ZeroDegree),
        Some(_) => energy_report(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeletionCheck {
    /// `E(G)`
    pub lhs: f64,
    /// `E(G - e) + 2`
    pub rhs: f64,
    pub holds: bool,
}

pub fn edge_deletion_check(g: &Graph, e: Edge) -> Result<DeletionCheck> {
    let without = g.delete_edge(e)?;
    let lhs = spectral::energy(g)?;
    let rhs = spectral::energy(&without)? + 2.0;
    Ok(DeletionCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + tolerance::BOUND_SLACK,
    })
}

/// `(p - 1)(1 + sqrt p) / 2`.
pub fn paley_energy_closed(m: PrimeModulus) -> Result<f64> {
    let p = validate_paley(m)? as f64;
    let energy = (p - 1.0) * (1.0 + p.sqrt()) / 2.0;
    debug_assert!(energy > paley_energy_floor(m));
    Ok(energy)
}

/// `p^{3/2} / 2`, which the Paley energy strictly exceeds.
pub fn paley_energy_floor(m: PrimeModulus) -> f64 {
    (m.get() as f64).powf(1.5) / 2.0
}

/// `(1 + sqrt p) / (1 + sqrt(p + 1))`, using `e0 = (p - 1)(1 + sqrt(p + 1)) / 2`.
pub fn paley_ratio_closed(m: PrimeModulus) -> Result<f64> {
    let p = validate_paley(m)? as f64;
    Ok((1.0 + p.sqrt()) / (1.0 + (p + 1.0).sqrt()))
}

/// The weaker lower bound `sqrt p / (sqrt p + 2)` on the Paley ratio.
pub fn paley_ratio_chain_lower(m: PrimeModulus) -> Result<f64> {
    let root = (validate_paley(m)? as f64).sqrt();
    Ok(root / (root + 2.0))
}

fn check_ring_param(q: usize) -> Result<()> {
    if q < 3 {
        return Err(Error::InvalidParameter {
            what: "ring of cliques",
            requirement: "q >= 3",
            got: q as u64,
        });
    }
    Ok(())
}

/// `E(q K_q) + 2 q^2 = 4q^2 - 2q`, an upper bound on the ring's energy.
pub fn ring_clique_energy_upper(q: usize) -> Result<f64> {
    check_ring_param(q)?;
    let q = q as f64;
    Ok(4.0 * q * q - 2.0 * q)
}

/// Two upper bounds on the ring-of-cliques ratio: `tight` divides the
/// energy bound by `e0(q^2, q + 1)`, `crude` by the smaller
/// `(q^2 - q - 1) sqrt(q + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingRatioBounds {
    pub tight: f64,
    pub crude: f64,
}

pub fn theorem1_ratio_upper(q: usize) -> Result<RingRatioBounds> {
    let upper = ring_clique_energy_upper(q)?;
    let tight = upper / e0(q * q, q + 1)?;
    let qf = q as f64;
    let crude = upper / ((qf * qf - qf - 1.0) * (qf + 1.0).sqrt());
    Ok(RingRatioBounds { tight, crude })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Paley,
    RingOfCliques,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Paley => "paley",
            Family::RingOfCliques => "ring_of_cliques",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "paley" => Ok(Family::Paley),
            "ring_of_cliques" | "ring-clique" | "ring" => Ok(Family::RingOfCliques),
            "custom" => Ok(Family::Custom),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Build the graph and run the eigensolver.
    Numeric,
    /// Use the closed-form spectrum.
    Closed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub family: Family,
    pub param: u64,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub energy: f64,
    pub e0: f64,
    pub ratio: f64,
    pub closed_ratio: Option<f64>,
    /// Crude upper bound for rings of cliques, chain lower bound for Paley.
    pub paper_bound: Option<f64>,
}

impl RatioRow {
    fn new(family: Family, param: u64, n: usize, k: usize, energy: f64) -> Result<Self> {
        let e0 = e0(n, k)?;
        Ok(RatioRow {
            family,
            param,
            n,
            k,
            m: n * k / 2,
            energy,
            e0,
            ratio: energy / e0,
            closed_ratio: None,
            paper_bound: None,
        })
    }

    /// A row for an arbitrary regular graph.
    pub fn custom(g: &Graph, param: u64) -> Result<Self> {
        let report = energy_ratio(g)?;
        let k = report.k.expect("energy_ratio only accepts regular graphs");
        RatioRow::new(Family::Custom, param, g.n(), k, report.energy)
    }
}

fn paley_row(p: u64, mode: Mode) -> Result<RatioRow> {
    let m = PrimeModulus::new(p)?;
    validate_paley(m)?;
    let n = p as usize;
    let energy = match mode {
        Mode::Numeric => spectral::energy(&Graph::paley(m)?)?,
        Mode::Closed => spectral::paley_spectrum_closed(m)?.energy(),
    };
    let mut row = RatioRow::new(Family::Paley, p, n, (n - 1) / 2, energy)?;
    row.closed_ratio = Some(paley_ratio_closed(m)?);
    row.paper_bound = Some(paley_ratio_chain_lower(m)?);
    Ok(row)
}

fn ring_row(q: u64, mode: Mode) -> Result<RatioRow> {
    let qs = usize::try_from(q).map_err(|_| Error::InvalidParameter {
        what: "ring of cliques",
        requirement: "q fits in usize",
        got: q,
    })?;
    check_ring_param(qs)?;
    let closed = spectral::ring_clique_spectrum_closed(qs)?.energy();
    let energy = match mode {
        Mode::Numeric => spectral::energy(&Graph::ring_of_cliques(qs)?)?,
        Mode::Closed => closed,
    };
    let mut row = RatioRow::new(Family::RingOfCliques, q, qs * qs, qs + 1, energy)?;
    row.closed_ratio = Some(closed / row.e0);
    row.paper_bound = Some(theorem1_ratio_upper(qs)?.crude);
    Ok(row)
}

/// One row per parameter, in input order. Rows are computed in parallel.
pub fn ratio_table(family: Family, params: &[u64], mode: Mode) -> Result<Vec<RatioRow>> {
    params
        .par_iter()
        .map(|&param| {
            let row = match family {
                Family::Paley => paley_row(param, mode),
                Family::RingOfCliques => ring_row(param, mode),
                Family::Custom => Err(Error::InvalidParameter {
                    what: "ratio table",
                    requirement: "a paley or ring_of_cliques family",
                    got: param,
                }),
            };
            row.map_err(|e| Error::BadRow {
                param,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::is_prime;
    use crate::spectral::ring_clique_spectrum_closed;
    use proptest::prelude::*;

    fn modulus(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn e0_examples() {
        assert_eq!(e0(7, 0).unwrap(), 0.0);
        assert_eq!(e0(5, 4).unwrap(), 8.0);
        assert!(close(e0(25, 6).unwrap(), 58.306_787_322_488_08, 1e-12));
        assert_eq!(e0(5, 5), Err(Error::DegreeOutOfRange { n: 5, k: 5 }));
        assert_eq!(e0(0, 0), Err(Error::DegreeOutOfRange { n: 0, k: 0 }));
        for n in 2..60 {
            assert_eq!(e0(n, n - 1).unwrap(), 2.0 * (n as f64 - 1.0));
        }
    }

    #[test]
    fn energy_ratio_examples() {
        let k5 = energy_ratio(&Graph::complete(5)).unwrap();
        assert!(close(k5.ratio.unwrap(), 1.0, 1e-8));

        let p13 = energy_ratio(&Graph::paley(modulus(13)).unwrap()).unwrap();
        let closed = (1.0 + 13f64.sqrt()) / (1.0 + 14f64.sqrt());
        assert!(close(p13.ratio.unwrap(), closed, 1e-10));
        assert!(close(p13.ratio.unwrap(), 0.971_295_667, 1e-9));

        let r3 = energy_ratio(&Graph::ring_of_cliques(3).unwrap()).unwrap();
        assert!(close(r3.ratio.unwrap(), 16.0 / (4.0 + 160f64.sqrt()), 1e-10));
        assert!(close(r3.ratio.unwrap(), 0.961_012_293, 1e-9));

        assert_eq!(energy_ratio(&Graph::path(3)), Err(Error::NotRegular));
        assert_eq!(energy_ratio(&Graph::empty(3)), Err(Error::ZeroDegree));
        assert_eq!(energy_ratio(&Graph::empty(0)), Err(Error::NotRegular));
    }

    #[test]
    fn report_fields_are_consistent() {
        let report = energy_report(&Graph::path(3)).unwrap();
        assert_eq!((report.k, report.e0, report.ratio), (None, None, None));
        let report = energy_report(&Graph::empty(2)).unwrap();
        assert_eq!((report.k, report.e0, report.ratio), (Some(0), None, None));
        let report = energy_report(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(report.energy, report.spectrum.energy());
        assert_eq!(report.ratio.unwrap(), report.energy / report.e0.unwrap());
    }

    #[test]
    fn deletion_examples() {
        let e01 = Edge::new(0, 1).unwrap();
        let k2 = edge_deletion_check(&Graph::complete(2), e01).unwrap();
        assert!(close(k2.lhs, 2.0, 1e-12) && close(k2.rhs, 2.0, 1e-12) && k2.holds);

        let sqrt8 = 8f64.sqrt();
        let p3 = edge_deletion_check(&Graph::path(3), e01).unwrap();
        assert!(close(p3.lhs, sqrt8, 1e-12) && close(p3.rhs, 4.0, 1e-12) && p3.holds);

        let k3 = edge_deletion_check(&Graph::complete(3), e01).unwrap();
        assert!(close(k3.lhs, 4.0, 1e-12) && close(k3.rhs, sqrt8 + 2.0, 1e-12) && k3.holds);

        let missing = Edge::new(0, 2).unwrap();
        assert_eq!(
            edge_deletion_check(&Graph::path(3), missing),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn paley_closed_forms() {
        assert!(close(paley_energy_closed(modulus(5)).unwrap(), 6.472_135_955, 1e-9));
        assert!(close(paley_energy_closed(modulus(13)).unwrap(), 27.633_307_653, 1e-9));
        assert!(close(paley_energy_closed(modulus(17)).unwrap(), 40.984_845_005, 1e-9));
        assert!(close(paley_ratio_closed(modulus(13)).unwrap(), 0.971_295_667, 1e-9));
        assert!(close(paley_ratio_closed(modulus(101)).unwrap(), 0.995_528_691, 1e-9));
        let lower = paley_ratio_chain_lower(modulus(13)).unwrap();
        assert!(close(lower, 0.643_210_828, 1e-9));
        assert!(paley_ratio_closed(modulus(13)).unwrap() > lower);
        assert_eq!(paley_energy_closed(modulus(11)), Err(Error::NotOneModFour(11)));
        assert_eq!(paley_ratio_closed(modulus(3)), Err(Error::ModulusTooSmall(3, 5)));
    }

    #[test]
    fn paley_closed_energy_matches_e0_simplification() {
        for p in (5..2000).filter(|&p| p % 4 == 1 && is_prime(p)) {
            let m = modulus(p);
            let n = p as usize;
            let ratio = paley_energy_closed(m).unwrap() / e0(n, (n - 1) / 2).unwrap();
            assert!(close(ratio, paley_ratio_closed(m).unwrap(), 1e-13), "p = {p}");
            assert!(paley_energy_closed(m).unwrap() > paley_energy_floor(m));
        }
    }

    #[test]
    fn paley_numeric_energy_matches_closed() {
        for p in (5..=200).filter(|&p| p % 4 == 1 && is_prime(p)) {
            let m = modulus(p);
            let numeric = spectral::energy(&Graph::paley(m).unwrap()).unwrap();
            assert!(close(numeric, paley_energy_closed(m).unwrap(), tolerance::PALEY_ENERGY));
        }
    }

    #[test]
    fn ring_bounds() {
        assert_eq!(ring_clique_energy_upper(3).unwrap(), 30.0);
        assert_eq!(ring_clique_energy_upper(5).unwrap(), 90.0);
        assert_eq!(ring_clique_energy_upper(10).unwrap(), 380.0);
        assert!(ring_clique_energy_upper(2).is_err());

        let energy3 = spectral::energy(&Graph::ring_of_cliques(3).unwrap()).unwrap();
        assert!(close(energy3, 16.0, 1e-10) && energy3 <= 30.0);

        assert!(close(theorem1_ratio_upper(3).unwrap().crude, 3.0, 1e-12));
        let b16 = theorem1_ratio_upper(16).unwrap();
        let e0_16 = 17.0 + (17.0f64 * 255.0 * 239.0).sqrt();
        assert!(close(b16.tight, 992.0 / e0_16, 1e-12));
        assert!(close(b16.tight, 0.958_571_930, 1e-9));
        let b100 = theorem1_ratio_upper(100).unwrap();
        assert!(close(b100.crude, 39800.0 / (9899.0 * 101f64.sqrt()), 1e-12));
        assert!(close(b100.crude, 0.400_065_463, 1e-9));

        for q in 3..=500 {
            let b = theorem1_ratio_upper(q).unwrap();
            assert!(b.tight <= b.crude, "q = {q}");
        }
        for q in 3..=200 {
            let energy = ring_clique_spectrum_closed(q).unwrap().energy();
            assert!(energy <= ring_clique_energy_upper(q).unwrap() + tolerance::BOUND_SLACK);
        }
    }

    #[test]
    fn ratio_table_examples() {
        let numeric = ratio_table(Family::Paley, &[13], Mode::Numeric).unwrap();
        let closed = ratio_table(Family::Paley, &[13], Mode::Closed).unwrap();
        assert!(close(numeric[0].ratio, closed[0].ratio, 1e-7));
        assert!(close(closed[0].ratio, 0.971_295_667, 1e-9));
        assert_eq!((closed[0].n, closed[0].k, closed[0].m), (13, 6, 39));

        let ring = ratio_table(Family::RingOfCliques, &[3], Mode::Closed).unwrap();
        assert!(close(ring[0].energy, 16.0, 1e-12));
        assert!(close(ring[0].ratio, 0.961_012_293, 1e-9));
        assert_eq!(ring[0].paper_bound, Some(theorem1_ratio_upper(3).unwrap().crude));

        let err = ratio_table(Family::Paley, &[13, 12], Mode::Closed).unwrap_err();
        assert_eq!(
            err,
            Error::BadRow {
                param: 12,
                source: Box::new(Error::NotPrime(12))
            }
        );
        assert!(ratio_table(Family::RingOfCliques, &[2], Mode::Closed).is_err());
        assert!(ratio_table(Family::Custom, &[2], Mode::Closed).is_err());
    }

    #[test]
    fn ratio_table_keeps_input_order() {
        let params = [29, 5, 101, 13, 17];
        let rows = ratio_table(Family::Paley, &params, Mode::Closed).unwrap();
        let got: Vec<u64> = rows.iter().map(|r| r.param).collect();
        assert_eq!(got, params);
    }

    #[test]
    fn modes_agree_on_small_params() {
        let primes: Vec<u64> = (5..=200).filter(|&p| p % 4 == 1 && is_prime(p)).collect();
        let rings: Vec<u64> = (3..=12).collect();
        for (family, params) in [(Family::Paley, primes), (Family::RingOfCliques, rings)] {
            let a = ratio_table(family, &params, Mode::Numeric).unwrap();
            let b = ratio_table(family, &params, Mode::Closed).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!(close(x.ratio, y.ratio, 1e-7), "{family} {}", x.param);
                assert_eq!(x.closed_ratio, y.closed_ratio);
            }
        }
    }

    #[test]
    fn custom_rows() {
        let row = RatioRow::custom(&Graph::complete(6), 6).unwrap();
        assert_eq!(row.family, Family::Custom);
        assert!(close(row.ratio, 1.0, 1e-10));
        assert_eq!((row.closed_ratio, row.paper_bound), (None, None));
        assert!(RatioRow::custom(&Graph::path(4), 0).is_err());
    }

    proptest! {
        #[test]
        fn edge_deletion_never_gains_more_than_two(
            n in 2usize..=12,
            frac in 0.0f64..=1.0,
            seed: u64,
            pick: prop::sample::Index,
        ) {
            let max = n * (n - 1) / 2;
            let m = 1 + (frac * (max - 1) as f64) as usize;
            let g = Graph::random(n, m, seed).unwrap();
            let edges: Vec<Edge> = g.edges().collect();
            let check = edge_deletion_check(&g, edges[pick.index(edges.len())]).unwrap();
            prop_assert!(check.holds, "{:?}", check);
        }

        #[test]
        fn regular_energy_below_e0(n in 3usize..=50) {
            for g in [Graph::complete(n), Graph::cycle(n).unwrap()] {
                let report = energy_ratio(&g).unwrap();
                prop_assert!(report.energy <= report.e0.unwrap() + tolerance::BOUND_SLACK);
            }
        }
    }
}
