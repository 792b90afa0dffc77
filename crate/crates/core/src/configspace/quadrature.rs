//! Gauss-Jacobi quadrature on [0, 1] with weight (1-s)^alpha * s^beta.
//!
//! All radial integrals over the unit-disk configuration space are taken in
//! the variable s = r^2, so the equilibrium weight and the spring-potential
//! singularity are absorbed into the quadrature weight exactly and never
//! evaluated pointwise.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::util::beta;

/// Monic recurrence coefficients for the Jacobi weight (1-s)^alpha * s^beta
/// on [0, 1]: p_{n+1}(s) = (s - a_n) p_n(s) - b_n p_{n-1}(s).
///
/// `b[0]` holds the total mass of the weight, so the squared norm of the
/// monic polynomial p_n is b[0] * b[1] * ... * b[n].
pub fn jacobi_recurrence(n: usize, alpha: f64, beta_exp: f64) -> (Vec<f64>, Vec<f64>) {
    let (al, be) = (alpha, beta_exp);
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let k = i as f64;
        // standard [-1,1] coefficients, then shifted to [0,1]
        let a_std = if i == 0 {
            (be - al) / (al + be + 2.0)
        } else {
            (be * be - al * al) / ((2.0 * k + al + be) * (2.0 * k + al + be + 2.0))
        };
        let b_std = if i == 0 {
            beta(al + 1.0, be + 1.0) // already [0,1] mass
        } else if i == 1 {
            4.0 * (al + 1.0) * (be + 1.0) / ((al + be + 2.0).powi(2) * (al + be + 3.0))
        } else {
            let d = 2.0 * k + al + be;
            4.0 * k * (k + al) * (k + be) * (k + al + be) / (d * d * (d * d - 1.0))
        };
        a.push(0.5 * (1.0 + a_std));
        b.push(if i == 0 { b_std } else { 0.25 * b_std });
    }
    (a, b)
}

/// A fixed Gauss-Jacobi rule: integrates (1-s)^alpha * s^beta * f(s) over
/// [0, 1] exactly for polynomial f up to degree 2n - 1.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    alpha: f64,
    beta: f64,
}

impl QuadratureRule {
    pub fn gauss_jacobi(n: usize, alpha: f64, beta_exp: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Construction("quadrature order must be >= 1".into()));
        }
        if !alpha.is_finite() || !beta_exp.is_finite() || alpha <= -1.0 || beta_exp <= -1.0 {
            return Err(Error::Construction(format!(
                "jacobi exponents must be finite and > -1, got alpha={alpha}, beta={beta_exp}"
            )));
        }
        let (a, b) = jacobi_recurrence(n, alpha, beta_exp);
        // Golub-Welsch: symmetric tridiagonal Jacobi matrix
        let mut jac = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            jac[(i, i)] = a[i];
            if i + 1 < n {
                let off = b[i + 1].sqrt();
                jac[(i, i + 1)] = off;
                jac[(i + 1, i)] = off;
            }
        }
        let eig = jac.symmetric_eigen();
        let mut pairs: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let v0 = eig.eigenvectors[(0, j)];
                (eig.eigenvalues[j], b[0] * v0 * v0)
            })
            .collect();
        pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        let nodes: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let weights: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        if nodes.iter().any(|&s| !(0.0..=1.0).contains(&s)) {
            return Err(Error::Construction(
                "gauss-jacobi nodes left [0,1]; eigen solve unreliable".into(),
            ));
        }
        Ok(Self {
            nodes,
            weights,
            alpha,
            beta: beta_exp,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn exponents(&self) -> (f64, f64) {
        (self.alpha, self.beta)
    }

    /// Integral of (1-s)^alpha * s^beta * f(s) over [0, 1].
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        for (&s, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(s);
        }
        acc
    }
}
