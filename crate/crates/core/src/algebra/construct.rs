//! Direct sums, semidirect products and central extensions.

use num_traits::Zero;

use super::{BracketEntry, Cocycle2, Ideal, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::rat::{is_zero_vec, unit, zeros};
use crate::linalg::{Matrix, Rat, Subspace};

/// A finite-dimensional representation given by the images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    domain: LieAlgebra,
    space_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Validates `rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i)`.
    pub fn new(domain: &LieAlgebra, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), got: action.len() });
        }
        let space_dim = action.first().map_or(0, Matrix::rows);
        for m in &action {
            if m.rows() != space_dim || m.cols() != space_dim {
                return Err(Error::DimensionMismatch { expected: space_dim, got: m.rows() });
            }
        }
        let rep = Representation { domain: domain.clone(), space_dim, action };
        for i in 0..domain.dim() {
            for j in i + 1..domain.dim() {
                let lhs = rep.image(domain.basis_bracket(i, j));
                let ab = rep.action[i].mul(&rep.action[j])?;
                let ba = rep.action[j].mul(&rep.action[i])?;
                if lhs != ab.sub(&ba)? {
                    return Err(Error::NotARepresentation { i, j });
                }
            }
        }
        Ok(rep)
    }

    /// Zero action on `Q^dim`.
    pub fn trivial(domain: &LieAlgebra, dim: usize) -> Self {
        Representation { domain: domain.clone(), space_dim: dim, action: vec![Matrix::zeros(dim, dim); domain.dim()] }
    }

    pub fn adjoint(domain: &LieAlgebra) -> Self {
        let n = domain.dim();
        let action = (0..n).map(|i| domain.ad(&unit(n, i)).expect("basis vector")).collect();
        Representation { domain: domain.clone(), space_dim: n, action }
    }

    /// `rho^*(x) = -rho(x)^T`.
    pub fn dual(&self) -> Self {
        let action = self.action.iter().map(|m| m.transpose().scaled(&-Rat::from_integer(1.into()))).collect();
        Representation { domain: self.domain.clone(), space_dim: self.space_dim, action }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::Invalid("direct sum of representations of different algebras".into()));
        }
        let (a, b) = (self.space_dim, other.space_dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                Matrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x[(i, j)].clone(),
                    (false, false) => y[(i - a, j - a)].clone(),
                    _ => Rat::zero(),
                })
            })
            .collect();
        Ok(Representation { domain: self.domain.clone(), space_dim: a + b, action })
    }

    /// `P rho P^{-1}` for an invertible change of basis `P`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        let inv = p.inverse().ok_or_else(|| Error::Invalid("singular conjugating matrix".into()))?;
        let action = self
            .action
            .iter()
            .map(|m| p.mul(m)?.mul(&inv))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(&self.domain, action)
    }

    pub fn domain(&self) -> &LieAlgebra {
        &self.domain
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `rho(x) = sum_i x_i rho(e_i)`.
    pub fn image(&self, x: &[Rat]) -> Matrix {
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                for i in 0..self.space_dim {
                    for j in 0..self.space_dim {
                        if !m[(i, j)].is_zero() {
                            out[(i, j)] += c * &m[(i, j)];
                        }
                    }
                }
            }
        }
        out
    }
}

/// `L1 ⊕ L2` with the basis of `L1` first.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let (m, n) = (a.dim(), b.dim());
    let mut entries: Vec<BracketEntry> = Vec::new();
    for (i, j, v) in a.nonzero_brackets() {
        let mut w = v.to_vec();
        w.extend(zeros(n));
        entries.push((i, j, w));
    }
    for (i, j, v) in b.nonzero_brackets() {
        let mut w = zeros(m);
        w.extend(v.iter().cloned());
        entries.push((m + i, m + j, w));
    }
    let mut labels: Vec<String> = a.labels().iter().chain(b.labels()).cloned().collect();
    let mut seen = std::collections::BTreeSet::new();
    if !labels.iter().all(|l| seen.insert(l.clone())) {
        labels = (0..m + n).map(|i| format!("e{i}")).collect();
    }
    LieAlgebra::new(m + n, &entries)
        .expect("direct sum of Lie algebras is a Lie algebra")
        .with_labels(labels)
}

/// `k ⋉ V` with bracket `[(z1, y1), (z2, y2)] = ([z1, z2], z1·y2 - z2·y1)`.
/// The basis of `k` comes first; the returned ideal is `V`.
pub fn semidirect(k: &LieAlgebra, rep: &Representation) -> Result<(LieAlgebra, Ideal)> {
    if rep.domain() != k {
        return Err(Error::Invalid("representation is not of the given algebra".into()));
    }
    let (m, d) = (k.dim(), rep.space_dim());
    let n = m + d;
    let mut entries: Vec<BracketEntry> = Vec::new();
    for (i, j, v) in k.nonzero_brackets() {
        let mut w = v.to_vec();
        w.extend(zeros(d));
        entries.push((i, j, w));
    }
    for a in 0..m {
        for y in 0..d {
            let col = rep.action()[a].column(y);
            if is_zero_vec(&col) {
                continue;
            }
            let mut w = zeros(m);
            w.extend(col);
            entries.push((a, m + y, w));
        }
    }
    let mut labels: Vec<String> = k.labels().to_vec();
    labels.extend((0..d).map(|y| format!("v{y}")));
    let alg = LieAlgebra::new(n, &entries)?.with_labels(labels);
    let v_space = Subspace::span(n, &(m..n).map(|i| unit(n, i)).collect::<Vec<_>>())?;
    let ideal = Ideal::new(&alg, v_space)?;
    Ok((alg, ideal))
}

/// One-dimensional central extension `Q ⊕ Q z` with `[x, y] = [x, y]_Q + c(x, y) z`.
/// The new generator `z` is the last basis vector.
pub fn central_extension(q: &LieAlgebra, c: &Cocycle2) -> Result<LieAlgebra> {
    let n = q.dim();
    if c.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: c.dim() });
    }
    let mut entries: Vec<BracketEntry> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut w = q.basis_bracket(i, j).to_vec();
            w.push(c.form()[(i, j)].clone());
            if !is_zero_vec(&w) {
                entries.push((i, j, w));
            }
        }
    }
    let mut labels = q.labels().to_vec();
    labels.push("z".to_string());
    LieAlgebra::new(n + 1, &entries)
        .map(|a| a.with_labels(labels))
        .map_err(|e| match e {
            Error::JacobiViolation { i, j, k, .. } => {
                Error::NotACocycle(format!("extension violates Jacobi on (e{i}, e{j}, e{k})"))
            }
            other => other,
        })
}
