//! Configuration space of polymer elongations: the unit disk B(0,1) carrying
//! the FENE equilibrium density psi_inf(R) = (1-|R|^2)^k / C0, together with
//! weighted quadrature and the orthonormal Galerkin basis used by the
//! Fokker-Planck solver.

pub mod basis;
pub mod quadrature;

pub use basis::{ConfigBasis, DiskQuadrature};
pub use quadrature::QuadratureRule;

use crate::error::{Error, Result};

/// Run parameters of the spring model and its Galerkin discretization.
///
/// `k` is the spring-potential exponent; `n_r` the number of radial degrees
/// per angular mode; `m_max` the largest retained |angular wavenumber|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeneParams {
    pub k: f64,
    pub n_r: usize,
    pub m_max: usize,
}

impl FeneParams {
    pub fn new(k: f64, n_r: usize, m_max: usize) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Domain(format!(
                "spring exponent k must be a positive real, got {k}"
            )));
        }
        if n_r < 2 {
            return Err(Error::Domain(format!("n_r must be >= 2, got {n_r}")));
        }
        if m_max < 2 {
            // the |m| = 2 modes carry the stress; dropping them makes the
            // coupled model meaningless
            return Err(Error::Domain(format!("m_max must be >= 2, got {m_max}")));
        }
        Ok(Self { k, n_r, m_max })
    }

    /// Radial quadrature size used for the mass and stiffness assemblies.
    pub fn quad_len(&self) -> usize {
        self.n_r + self.k.ceil() as usize + 4
    }
}

/// Normalization integral of the equilibrium weight over the unit disk:
/// C0(k) = int_B (1-|R|^2)^k dR = pi / (k+1).
///
/// Accepts any k > -1 so oracle code can probe the integrable range; the
/// simulation itself requires k > 0.
pub fn normalization_constant(k: f64) -> Result<f64> {
    if !k.is_finite() || k <= -1.0 {
        return Err(Error::Domain(format!(
            "normalization constant needs finite k > -1, got {k}"
        )));
    }
    Ok(std::f64::consts::PI / (k + 1.0))
}

/// The equilibrium density psi_inf with its normalization constant.
#[derive(Debug, Clone, Copy)]
pub struct Equilibrium {
    k: f64,
    c0: f64,
}

impl Equilibrium {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Domain(format!(
                "equilibrium requires k > 0, got {k}"
            )));
        }
        Ok(Self {
            k,
            c0: normalization_constant(k)?,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    /// psi_inf(R) = (1-|R|^2)^k / C0 for |R| <= 1; exactly 0 on the boundary.
    pub fn density(&self, r: [f64; 2]) -> Result<f64> {
        let rr = r[0] * r[0] + r[1] * r[1];
        if rr > 1.0 {
            return Err(Error::Domain(format!(
                "equilibrium density evaluated outside the unit disk, |R|^2 = {rr}"
            )));
        }
        if rr == 1.0 {
            return Ok(0.0);
        }
        Ok((1.0 - rr).powf(self.k) / self.c0)
    }
}

/// Gradient of the FENE potential U(R) = -k log(1-|R|^2):
/// grad U = 2k R / (1-|R|^2), defined for |R| < 1.
pub fn potential_gradient(r: [f64; 2], k: f64) -> Result<[f64; 2]> {
    let rr = r[0] * r[0] + r[1] * r[1];
    if rr >= 1.0 {
        return Err(Error::Domain(format!(
            "potential gradient is singular on |R| >= 1, got |R|^2 = {rr}"
        )));
    }
    let f = 2.0 * k / (1.0 - rr);
    Ok([f * r[0], f * r[1]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Adaptive Simpson on [0,1]; the independent oracle for the
    /// normalization integral 2*pi*int_0^1 (1-r^2)^k r dr.
    fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let simpson = |a: f64, b: f64| {
            let m = 0.5 * (a + b);
            (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
        };
        let whole = simpson(a, b);
        let left = simpson(a, m);
        let right = simpson(m, b);
        if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            adaptive_simpson(f, a, m, tol / 2.0, depth - 1)
                + adaptive_simpson(f, m, b, tol / 2.0, depth - 1)
        }
    }

    #[test]
    fn normalization_matches_quadrature_oracle() {
        // k = 0 -> pi (disk area), k = 1 -> pi/2, k = 2 -> pi/3
        assert!((normalization_constant(0.0).unwrap() - PI).abs() < 1e-14);
        for &k in &[1.0, 2.0] {
            let integrand = move |r: f64| (1.0 - r * r).powf(k) * r;
            let oracle = 2.0 * PI * adaptive_simpson(&integrand, 0.0, 1.0, 1e-14, 40);
            let got = normalization_constant(k).unwrap();
            assert!(
                ((got - oracle) / oracle).abs() < 1e-10,
                "k={k}: got {got}, oracle {oracle}"
            );
            assert!((got - PI / (k + 1.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn normalization_identity_over_k_grid() {
        for &k in &[0.5, 1.0, 2.0, 5.0] {
            let c0 = normalization_constant(k).unwrap();
            assert!((c0 * (k + 1.0) / PI - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn normalization_rejects_bad_input() {
        assert!(normalization_constant(-1.0).is_err());
        assert!(normalization_constant(f64::NAN).is_err());
        assert!(normalization_constant(f64::INFINITY).is_err());
    }

    #[test]
    fn density_examples() {
        let eq = Equilibrium::new(1.0).unwrap();
        // center: 1/C0 = 2/pi
        let got = eq.density([0.0, 0.0]).unwrap();
        assert!((got - 2.0 / PI).abs() < 1e-14);
        // boundary: exactly zero
        assert_eq!(eq.density([1.0, 0.0]).unwrap(), 0.0);
        assert_eq!(Equilibrium::new(3.5).unwrap().density([0.0, 1.0]).unwrap(), 0.0);
        // R = (0.5, 0): 0.75 * 2/pi
        let got = eq.density([0.5, 0.0]).unwrap();
        assert!((got - 0.75 * 2.0 / PI).abs() < 1e-14);
        // outside: domain error
        assert!(eq.density([1.0, 0.1]).is_err());
    }

    #[test]
    fn density_integrates_to_one() {
        for &k in &[0.5, 1.0, 3.0] {
            let eq = Equilibrium::new(k).unwrap();
            // int_B psi_inf = (pi/C0) * int_0^1 (1-s)^k ds in s = r^2
            let rule = QuadratureRule::gauss_jacobi(12, k, 0.0).unwrap();
            let got = PI / eq.c0() * rule.integrate(|_| 1.0);
            assert!((got - 1.0).abs() < 1e-13, "k={k}: got {got}");
        }
    }

    #[test]
    fn potential_gradient_examples() {
        assert_eq!(potential_gradient([0.0, 0.0], 1.0).unwrap(), [0.0, 0.0]);
        let g = potential_gradient([0.5, 0.0], 1.0).unwrap();
        assert!((g[0] - 4.0 / 3.0).abs() < 1e-14 && g[1] == 0.0);
        let g = potential_gradient([0.0, 0.5], 2.0).unwrap();
        assert!(g[0] == 0.0 && (g[1] - 8.0 / 3.0).abs() < 1e-14);
        assert!(potential_gradient([1.0, 0.0], 1.0).is_err());
        assert!(potential_gradient([0.8, 0.8], 1.0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(FeneParams::new(1.0, 8, 2).is_ok());
        assert!(FeneParams::new(0.0, 8, 2).is_err());
        assert!(FeneParams::new(1.0, 1, 2).is_err());
        assert!(FeneParams::new(1.0, 8, 1).is_err());
    }
}
