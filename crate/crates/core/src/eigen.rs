//! Cyclic two-sided rotation eigensolver for Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal entry: the complex pivot is
//! reduced to the real symmetric case by factoring out its phase, then a
//! standard symmetric plane rotation is applied. Sweeps repeat until the
//! off-diagonal Frobenius norm drops below `1e-14 * ||M||_F`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C_ONE, C_ZERO};

const MAX_SWEEPS: usize = 100;
const CONVERGENCE_FACTOR: f64 = 1e-14;

pub(crate) fn eig_hermitian(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = m.dim();
    let threshold = CONVERGENCE_FACTOR * m.frobenius_norm();

    let mut a: Vec<Complex64> = m.data().to_vec();
    let mut v: Vec<Complex64> = vec![C_ZERO; n * n];
    for i in 0..n {
        v[i * n + i] = C_ONE;
    }

    let mut converged = off_frobenius(&a, n) <= threshold;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        converged = off_frobenius(&a, n) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    // ascending eigenvalues, eigenvector columns permuted to match
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (k, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, k, v[row * n + src]);
        }
    }
    Ok((eigenvalues, vectors))
}

fn off_frobenius(a: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            acc += 2.0 * a[p * n + q].norm_sqr();
        }
    }
    acc.sqrt()
}

/// Applies the unitary that zeroes `a[p][q]`, updating `a <- U† a U`
/// and accumulating `v <- v U`.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let z = a[p * n + q];
    let magnitude = z.norm();
    if magnitude == 0.0 {
        return;
    }
    let phase = z / magnitude;

    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * magnitude);
    let t = if theta.abs() > 1e153 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c*phase, s*phase], [-s, c]]
    let cp = phase * c;
    let sp = phase * s;
    let cpc = cp.conj();
    let spc = sp.conj();

    for j in 0..n {
        let ajp = a[j * n + p];
        let ajq = a[j * n + q];
        a[j * n + p] = ajp * cp - ajq * s;
        a[j * n + q] = ajp * sp + ajq * c;
    }
    for j in 0..n {
        let apj = a[p * n + j];
        let aqj = a[q * n + j];
        a[p * n + j] = cpc * apj - aqj * s;
        a[q * n + j] = spc * apj + aqj * c;
    }
    a[p * n + q] = C_ZERO;
    a[q * n + p] = C_ZERO;
    a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);

    for j in 0..n {
        let vjp = v[j * n + p];
        let vjq = v[j * n + q];
        v[j * n + p] = vjp * cp - vjq * s;
        v[j * n + q] = vjp * sp + vjq * c;
    }
}
