//! Dense real linear algebra for the oracle paths: parallel matrix products,
//! the scaled-and-squared exponential of a skew matrix, and a Jacobi
//! eigensolver for symmetric matrices. Everything here is self-contained so
//! the numeric routes stay independent of the exact character arithmetic.

use ndarray::parallel::prelude::*;
use ndarray::{Array2, ArrayView2, Axis};

/// Row-chunked parallel product. Small operands go straight to `dot`.
pub(crate) fn mat_mul(a: ArrayView2<f64>, b: ArrayView2<f64>) -> Array2<f64> {
    let n = a.nrows();
    if n < 256 {
        return a.dot(&b);
    }
    let mut out = Array2::zeros((n, b.ncols()));
    out.axis_chunks_iter_mut(Axis(0), 64)
        .into_par_iter()
        .zip(a.axis_chunks_iter(Axis(0), 64).into_par_iter())
        .for_each(|(mut oc, ac)| oc.assign(&ac.dot(&b)));
    out
}

/// 1-norm (maximum absolute column sum).
fn norm_1(a: ArrayView2<f64>) -> f64 {
    let mut best = 0.0f64;
    for col in a.axis_iter(Axis(1)) {
        let s: f64 = col.iter().map(|x| x.abs()).sum();
        best = best.max(s);
    }
    best
}

/// e^B by scaling and squaring around a 13-term Horner evaluation of the
/// exponential series. With the scaled norm held at 1/2, truncation sits
/// near 5e−16, far inside the 1e−12 budget; squaring a near-orthogonal
/// matrix does not amplify it meaningfully.
pub(crate) fn expm(b: ArrayView2<f64>) -> Array2<f64> {
    let dim = b.nrows();
    assert_eq!(dim, b.ncols());
    let norm = norm_1(b);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let a = b.mapv(|x| x / f64::powi(2.0, squarings as i32));

    let eye = Array2::<f64>::eye(dim);
    let mut acc = eye.clone();
    for k in (1..=13u32).rev() {
        let mut t = mat_mul(a.view(), acc.view());
        t.mapv_inplace(|x| x / k as f64);
        acc = t + &eye;
    }
    for _ in 0..squarings {
        acc = mat_mul(acc.view(), acc.view());
    }
    acc
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
pub(crate) fn symmetric_eigenvalues(mut a: Array2<f64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let tol = 1e-14 * scale;

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[[p, q]].abs();
            }
        }
        if off < tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[[k, p]];
                    let akq = a[[k, q]];
                    a[[k, p]] = c * akp - s * akq;
                    a[[k, q]] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[[p, k]];
                    let aqk = a[[q, k]];
                    a[[p, k]] = c * apk - s * aqk;
                    a[[q, k]] = s * apk + c * aqk;
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[[i, i]]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}
