//! Tsallis non-extensive statistics: entropy, q-deformed fermion occupation
//! numbers with their expansions in `q − 1`, and the particle number density
//! of a non-relativistic species in the Boltzmann regime.
//!
//! The number density
//! `n = g/(2πħ)³ ∫ d³p N(E)` with `E = mc² + p²/2m` and the first-order,
//! Boltzmann-limit occupation number splits into four Gaussian momentum
//! integrals with weights p², p², p⁴ and p⁶. The angular factor is
//! bookkept as `2π` times full-line momentum integrals, which equals `4π`
//! times the half-line integrals because the integrands are even.

use serde::{Deserialize, Serialize};

use crate::error::invalid;
use crate::moments::{moment_closed, moment_quadrature, MomentQuery, MomentResult};
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// ħ = c = k_B = 1.
    Natural,
    /// CODATA 2018 exact SI values.
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub units: UnitSystem,
    pub k_b: f64,
    pub hbar: f64,
    pub c: f64,
}

impl PhysicalConstants {
    pub const NATURAL: PhysicalConstants = PhysicalConstants {
        units: UnitSystem::Natural,
        k_b: 1.0,
        hbar: 1.0,
        c: 1.0,
    };

    pub const SI: PhysicalConstants = PhysicalConstants {
        units: UnitSystem::Si,
        k_b: 1.380_649e-23,
        hbar: 1.054_571_817e-34,
        c: 299_792_458.0,
    };

    pub fn for_units(units: UnitSystem) -> Self {
        match units {
            UnitSystem::Natural => Self::NATURAL,
            UnitSystem::Si => Self::SI,
        }
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::NATURAL
    }
}

/// One particle species at a given temperature and non-extensivity `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpeciesThermo {
    pub g: f64,
    pub mass: f64,
    pub mu: f64,
    pub temperature: f64,
    pub q: f64,
}

impl SpeciesThermo {
    pub fn new(g: f64, mass: f64, mu: f64, temperature: f64, q: f64) -> Result<Self> {
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !positive(g) {
            return Err(invalid("g", g, "degeneracy must be positive"));
        }
        if !positive(mass) {
            return Err(invalid("mass", mass, "mass must be positive"));
        }
        if !positive(temperature) {
            return Err(invalid("temperature", temperature, "temperature must be positive"));
        }
        if !mu.is_finite() {
            return Err(invalid("mu", mu, "chemical potential must be finite"));
        }
        if !q.is_finite() {
            return Err(invalid("q", q, "q must be finite"));
        }
        Ok(SpeciesThermo {
            g,
            mass,
            mu,
            temperature,
            q,
        })
    }

    /// `1/(k_B T)`.
    pub fn beta(&self, constants: &PhysicalConstants) -> f64 {
        1.0 / (constants.k_b * self.temperature)
    }

    /// `β(E − μ)` for occupation numbers, which take `E`, `μ` and `T` in one
    /// energy unit (temperature as `k_B T`).
    fn reduced_energy(&self, energy: f64) -> f64 {
        (energy - self.mu) / self.temperature
    }
}

/// Probabilities of Ω microstates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub const NORMALIZATION_TOL: f64 = 1e-12;

    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(invalid("p", "[]", "at least one microstate is required"));
        }
        if let Some(bad) = p.iter().find(|x| !(**x >= 0.0 && x.is_finite())) {
            return Err(invalid("p", bad, "probabilities must be finite and nonnegative"));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > Self::NORMALIZATION_TOL {
            return Err(invalid("p", total, "probabilities must sum to 1"));
        }
        Ok(ProbabilityVector(p))
    }

    pub fn uniform(states: usize) -> Self {
        ProbabilityVector(vec![1.0 / states as f64; states])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `e_{2−q}^x = [1 + (q−1)x]^(1/(q−1))`, and `eˣ` at `q = 1`.
pub fn q_exponential(x: f64, q: f64) -> Result<f64> {
    if q == 1.0 {
        return Ok(x.exp());
    }
    let d = q - 1.0;
    let bracket = 1.0 + d * x;
    if !(bracket > 0.0) {
        return Err(Error::CutoffViolation { bracket });
    }
    Ok(((d * x).ln_1p() / d).exp())
}

/// `S_q/k_B = (1 − Σ p_iᵍ)/(q − 1)`, with the Boltzmann–Gibbs
/// `−Σ p_i ln p_i` at `q = 1`.
///
/// Zero-probability states are left out of the sum. For `q ≠ 1` the sum is
/// rewritten as `−Σ p_i·expm1((q−1) ln p_i)/(q−1)`, equal to the defining
/// form for a normalized vector and free of cancellation near `q = 1`.
pub fn tsallis_entropy(p: &ProbabilityVector, q: f64) -> f64 {
    let occupied = p.as_slice().iter().copied().filter(|&pi| pi > 0.0);
    if q == 1.0 {
        return -occupied.map(|pi| pi * pi.ln()).sum::<f64>();
    }
    let d = q - 1.0;
    -occupied.map(|pi| pi * (d * pi.ln()).exp_m1()).sum::<f64>() / d
}

/// `1/(e_{2−q}^{β(E−μ)} + 1)`.
pub fn occupation_exact(energy: f64, species: &SpeciesThermo) -> Result<f64> {
    let x = species.reduced_energy(energy);
    Ok(1.0 / (q_exponential(x, species.q)? + 1.0))
}

/// Fermi–Dirac plus the first-order correction
/// `(q−1)/2 · x² eˣ/(eˣ+1)²` with `x = β(E−μ)`.
pub fn occupation_first_order(energy: f64, species: &SpeciesThermo) -> f64 {
    let x = species.reduced_energy(energy);
    // eˣ/(eˣ+1)² written with e^(−|x|) so it cannot overflow
    let e = (-x.abs()).exp();
    let fermi = if x >= 0.0 { e / (1.0 + e) } else { 1.0 / (1.0 + e) };
    let bell = e / ((1.0 + e) * (1.0 + e));
    fermi + 0.5 * (species.q - 1.0) * x * x * bell
}

/// `e^(−x) + (q−1)/2 · x² e^(−x)` with `x = β(E−μ)`; meant for `x ≫ 1`.
pub fn occupation_boltzmann_limit(energy: f64, species: &SpeciesThermo) -> f64 {
    let x = species.reduced_energy(energy);
    (-x).exp() * (1.0 + 0.5 * (species.q - 1.0) * x * x)
}

/// The four contributions to the number density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityTerms {
    /// Classical Boltzmann term (p² weight).
    pub classical: f64,
    /// `(q−1)/2·β²(mc²−μ)²` times the p² integral.
    pub rest_energy_squared: f64,
    /// Cross term `(q−1)/2·β²(mc²−μ)/m` times the p⁴ integral.
    pub cross: f64,
    /// `(q−1)/2·β²/(4m²)` times the p⁶ integral.
    pub kinetic_squared: f64,
}

impl DensityTerms {
    pub fn total(&self) -> f64 {
        self.classical + self.rest_energy_squared + self.cross + self.kinetic_squared
    }
}

/// How the momentum integrals are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentRoute {
    Closed,
    Quadrature { tol_exponent: i32 },
}

/// `∫ p^(2n) e^(−αp²) dp` over the real line with `α = β/2m`.
pub fn momentum_moment(
    n: u32,
    species: &SpeciesThermo,
    constants: &PhysicalConstants,
    route: MomentRoute,
) -> Result<MomentResult> {
    let alpha = species.beta(constants) / (2.0 * species.mass);
    let query = MomentQuery::new(n, alpha)?;
    match route {
        MomentRoute::Closed => Ok(moment_closed(query)),
        MomentRoute::Quadrature { tol_exponent } => {
            moment_quadrature(query, 10f64.powi(tol_exponent))
        }
    }
}

/// The number density assembled term by term from the momentum integrals.
pub fn density_terms(
    species: &SpeciesThermo,
    constants: &PhysicalConstants,
    route: MomentRoute,
) -> Result<DensityTerms> {
    let beta = species.beta(constants);
    let m = species.mass;
    let rest = m * constants.c * constants.c - species.mu;
    let norm = species.g / (2.0 * PI * constants.hbar).powi(3) * (-beta * rest).exp();
    let half_dq = 0.5 * (species.q - 1.0);

    let p2 = momentum_moment(1, species, constants, route)?.float_value;
    let p4 = momentum_moment(2, species, constants, route)?.float_value;
    let p6 = momentum_moment(3, species, constants, route)?.float_value;

    Ok(DensityTerms {
        classical: 2.0 * PI * norm * p2,
        rest_energy_squared: 2.0 * PI * norm * half_dq * beta * beta * rest * rest * p2,
        cross: 2.0 * PI * norm * half_dq * beta * beta * rest / m * p4,
        kinetic_squared: norm * half_dq * beta * beta * PI / (2.0 * m * m) * p6,
    })
}

/// Number density from the momentum integrals, via the closed-form moments
/// or, with a quadrature route, fully numerically.
pub fn density_integral(
    species: &SpeciesThermo,
    constants: &PhysicalConstants,
    route: MomentRoute,
) -> Result<f64> {
    Ok(density_terms(species, constants, route)?.total())
}

/// `g(mk_BT/2πħ²)^(3/2) e^(−x) {1 + (q−1)/2 [x² + 3x + 15/4]}` with
/// `x = (mc² − μ)/(k_B T)`.
pub fn density_closed(species: &SpeciesThermo, constants: &PhysicalConstants) -> f64 {
    let kt = constants.k_b * species.temperature;
    let x = (species.mass * constants.c * constants.c - species.mu) / kt;
    let thermal = (species.mass * kt / (2.0 * PI * constants.hbar * constants.hbar)).powf(1.5);
    let braces = 1.0 + 0.5 * (species.q - 1.0) * (x * x + 3.0 * x + 3.75);
    species.g * thermal * (-x).exp() * braces
}

/// The q = 1 density `g(mk_BT/2πħ²)^(3/2) e^((μ−mc²)/k_BT)`.
pub fn density_classical(species: &SpeciesThermo, constants: &PhysicalConstants) -> f64 {
    let classical = SpeciesThermo { q: 1.0, ..*species };
    density_closed(&classical, constants)
}
