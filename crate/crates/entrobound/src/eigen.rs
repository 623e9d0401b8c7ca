//! Dense symmetric/Hermitian eigenvalues by cyclic Jacobi rotation sweeps.
//!
//! Only eigenvalues are needed (states are reduced to their spectra at
//! ingestion), and dimensions are small, so plain Jacobi sweeps to
//! convergence are the right tool: foolproof on symmetric matrices and
//! accurate to a relative off-diagonal norm of 1e-12.
//!
//! A complex Hermitian matrix `H = A + iB` is handled through the standard
//! real embedding `[[A, -B], [B, A]]`, which is symmetric with the spectrum
//! of `H` doubled. Sorting and taking every second value recovers the
//! eigenvalues of `H` regardless of multiplicities.

// Plane-rotation updates read more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

use thiserror::Error;

/// Relative off-diagonal threshold: sweeps stop when
/// `offdiag_norm <= 1e-12 * frobenius_norm(A)`.
const REL_OFF_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 60;

#[derive(Debug, Error, PartialEq)]
pub enum EigenError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("Jacobi sweeps did not converge in {MAX_SWEEPS} sweeps")]
    NoConvergence,
}

fn frobenius_norm(a: &[Vec<f64>]) -> f64 {
    a.iter()
        .flat_map(|row| row.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
}

fn offdiag_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p][q] * a[p][q];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a real symmetric matrix, descending. The input is copied;
/// mild asymmetry is symmetrized away before the sweeps.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>, EigenError> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(EigenError::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        let _ = i;
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| 0.5 * (matrix[i][j] + matrix[j][i]))
                .collect()
        })
        .collect();

    let scale = frobenius_norm(&a).max(f64::MIN_POSITIVE);
    let tol = REL_OFF_TOL * scale;

    for _ in 0..MAX_SWEEPS {
        if offdiag_norm(&a) <= tol {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eigenvalues.sort_unstable_by(|x, y| y.total_cmp(x));
            return Ok(eigenvalues);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= tol / (n as f64 * n as f64) {
                    continue;
                }
                // Rotation angle annihilating a[p][q].
                let theta = 0.5 * (a[q][q] - a[p][p]) / apq;
                let t = {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(EigenError::NoConvergence)
}

/// Eigenvalues of a complex Hermitian matrix `re + i*im`, descending.
///
/// The caller is responsible for Hermiticity validation; the embedding
/// symmetrizes rounding-level dust.
pub fn hermitian_eigenvalues(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Vec<f64>, EigenError> {
    let n = re.len();
    if im.len() != n {
        return Err(EigenError::NotSquare {
            rows: n,
            cols: im.len(),
        });
    }
    if im.iter().flat_map(|row| row.iter()).all(|&v| v == 0.0) {
        return symmetric_eigenvalues(re);
    }
    // Real embedding [[A, -B], [B, A]]; every eigenvalue appears twice.
    let mut embedded = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        if re[i].len() != n || im[i].len() != n {
            return Err(EigenError::NotSquare {
                rows: n,
                cols: re[i].len().max(im[i].len()),
            });
        }
        for j in 0..n {
            embedded[i][j] = re[i][j];
            embedded[n + i][n + j] = re[i][j];
            embedded[i][n + j] = -im[i][j];
            embedded[n + i][j] = im[i][j];
        }
    }
    let doubled = symmetric_eigenvalues(&embedded)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let a = vec![
            vec![0.5, 0.0, 0.0],
            vec![0.0, 0.2, 0.0],
            vec![0.0, 0.0, 0.3],
        ];
        let eigenvalues = symmetric_eigenvalues(&a).unwrap();
        assert_eq!(eigenvalues.len(), 3);
        for (got, want) in eigenvalues.iter().zip([0.5, 0.3, 0.2]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn hadamard_rotated_two_level() {
        // U diag(0.7, 0.3) U^T for the Hadamard rotation: [[0.5, 0.2], [0.2, 0.5]].
        let a = vec![vec![0.5, 0.2], vec![0.2, 0.5]];
        let eigenvalues = symmetric_eigenvalues(&a).unwrap();
        assert!((eigenvalues[0] - 0.7).abs() < 1e-14);
        assert!((eigenvalues[1] - 0.3).abs() < 1e-14);
    }

    #[test]
    fn repeated_eigenvalues_converge() {
        let a = vec![
            vec![0.25, 0.0, 0.0, 0.0],
            vec![0.0, 0.25, 0.0, 0.0],
            vec![0.0, 0.0, 0.25, 0.0],
            vec![0.0, 0.0, 0.0, 0.25],
        ];
        let eigenvalues = symmetric_eigenvalues(&a).unwrap();
        assert!(eigenvalues.iter().all(|v| (v - 0.25).abs() < 1e-14));
    }

    #[test]
    fn complex_hermitian_pauli_y_mix() {
        // [[0.5, -0.2i], [0.2i, 0.5]] has eigenvalues 0.7 and 0.3.
        let re = vec![vec![0.5, 0.0], vec![0.0, 0.5]];
        let im = vec![vec![0.0, -0.2], vec![0.2, 0.0]];
        let eigenvalues = hermitian_eigenvalues(&re, &im).unwrap();
        assert_eq!(eigenvalues.len(), 2);
        assert!((eigenvalues[0] - 0.7).abs() < 1e-13);
        assert!((eigenvalues[1] - 0.3).abs() < 1e-13);
    }

    #[test]
    fn complex_hermitian_with_degenerate_spectrum() {
        // diag(0.5, 0.25, 0.25) conjugated by a complex unitary keeps the
        // doubled-spectrum bookkeeping honest under multiplicity.
        let c = 0.5f64.sqrt();
        // U = [[c, c, 0], [ic, -ic, 0], [0, 0, 1]]
        let u_re = [[c, c, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
        let u_im = [[0.0, 0.0, 0.0], [c, -c, 0.0], [0.0, 0.0, 0.0]];
        let diag = [0.5, 0.25, 0.25];
        let mut re = vec![vec![0.0; 3]; 3];
        let mut im = vec![vec![0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    // (U diag U†)_{ij} = Σ_k d_k U_{ik} conj(U_{jk})
                    let (a, b) = (u_re[i][k], u_im[i][k]);
                    let (cjr, cji) = (u_re[j][k], -u_im[j][k]);
                    re[i][j] += diag[k] * (a * cjr - b * cji);
                    im[i][j] += diag[k] * (a * cji + b * cjr);
                }
            }
        }
        let eigenvalues = hermitian_eigenvalues(&re, &im).unwrap();
        for (got, want) in eigenvalues.iter().zip([0.5, 0.25, 0.25]) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
    }

    #[test]
    fn rejects_ragged_matrix() {
        let a = vec![vec![1.0, 0.0], vec![0.0]];
        assert!(matches!(
            symmetric_eigenvalues(&a),
            Err(EigenError::NotSquare { .. })
        ));
    }

    #[test]
    fn random_symmetric_reconstruction() {
        // Deterministic pseudo-random symmetric matrix; eigenvalue sum and
        // square-sum must match trace and Frobenius norm.
        let n = 6;
        let mut seed = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = next();
                a[i][j] = v;
                a[j][i] = v;
            }
        }
        let eigenvalues = symmetric_eigenvalues(&a).unwrap();
        let trace: f64 = (0..n).map(|i| a[i][i]).sum();
        let fro2: f64 = a.iter().flat_map(|r| r.iter()).map(|v| v * v).sum();
        let sum: f64 = eigenvalues.iter().sum();
        let sq: f64 = eigenvalues.iter().map(|v| v * v).sum();
        assert!((sum - trace).abs() < 1e-11);
        assert!((sq - fro2).abs() < 1e-11);
        assert!(eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }
}
