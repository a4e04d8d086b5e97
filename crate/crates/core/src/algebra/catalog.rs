//! Named test algebras with designated ideals.

use super::{central_extension, direct_sum, semidirect, Cocycle2, Ideal, LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linalg::rat::{from_ints, unit};
use crate::linalg::{Matrix, Rat};

/// A catalog algebra. The first ideal is the designated one.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub ideals: Vec<(String, Ideal)>,
    /// A covector worth looking at, when there is an obvious one.
    pub sigma: Option<Vec<Rat>>,
    /// Present when the algebra was built as `k ⋉ V`.
    pub semidirect: Option<(LieAlgebra, Representation)>,
}

impl CatalogEntry {
    fn new(name: &str, algebra: LieAlgebra) -> Self {
        CatalogEntry { name: name.to_string(), algebra, ideals: Vec::new(), sigma: None, semidirect: None }
    }

    fn with_ideal(mut self, name: &str, basis: &[Vec<Rat>]) -> Self {
        let ideal = Ideal::from_vectors(&self.algebra, basis).expect("catalog ideal");
        self.ideals.push((name.to_string(), ideal));
        self
    }

    fn with_whole(mut self, name: &str) -> Self {
        self.ideals.push((name.to_string(), Ideal::whole(&self.algebra)));
        self
    }

    fn with_sigma(mut self, sigma: &[i64]) -> Self {
        self.sigma = Some(from_ints(sigma));
        self
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn designated_ideal(&self) -> Option<&Ideal> {
        self.ideals.first().map(|(_, i)| i)
    }
}

const NAMES: &[&str] = &[
    "abelian:1",
    "abelian:2",
    "abelian:3",
    "abelian:4",
    "heisenberg3",
    "sl2",
    "gl2",
    "aff1",
    "e2",
    "so3",
    "se3",
    "oscillator",
    "sl2-q2",
    "filiform4",
    "heisenberg3+ab1",
];

/// Names accepted by [`catalog`]; `abelian:n` works for every `n`, the
/// listed ones are the representatives used in sweeps.
pub fn catalog_names() -> &'static [&'static str] {
    NAMES
}

/// Every (algebra name, ideal name) pair in the catalog.
pub fn catalog_pairs() -> Vec<(String, String)> {
    NAMES
        .iter()
        .flat_map(|n| {
            let e = catalog(n).expect("listed name");
            e.ideals.into_iter().map(move |(i, _)| (n.to_string(), i))
        })
        .collect()
}

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    if let Some(n) = name.strip_prefix("abelian:") {
        let n: usize = n.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        let mut e = CatalogEntry::new(name, LieAlgebra::abelian(n));
        if n > 0 {
            e = e.with_whole("whole");
        }
        return Ok(e);
    }
    let e = match name {
        "heisenberg3" => CatalogEntry::new(name, heisenberg3())
            .with_ideal("center", &[unit(3, 2)])
            .with_ideal("span12", &[unit(3, 1), unit(3, 2)])
            .with_sigma(&[0, 0, 1]),
        "sl2" => CatalogEntry::new(name, sl2()).with_whole("sl2").with_sigma(&[1, 0, 0]),
        "gl2" => CatalogEntry::new(name, gl2())
            .with_ideal("sl2", &[unit(4, 0), unit(4, 1), unit(4, 2)])
            .with_ideal("center", &[unit(4, 3)])
            .with_sigma(&[1, 0, 0, 1]),
        "aff1" => CatalogEntry::new(name, aff1())
            .with_ideal("derived", &[unit(2, 1)])
            .with_whole("whole")
            .with_sigma(&[0, 1]),
        "e2" => {
            let (alg, rep) = e2_parts();
            let mut e = CatalogEntry::new(name, semidirect(&alg, &rep)?.0.with_labels(["r", "p1", "p2"]))
                .with_ideal("translations", &[unit(3, 1), unit(3, 2)])
                .with_sigma(&[0, 1, 0]);
            e.semidirect = Some((alg, rep));
            e
        }
        "so3" => CatalogEntry::new(name, so3()).with_whole("so3").with_sigma(&[0, 0, 1]),
        "se3" => {
            let k = so3();
            let rep = Representation::adjoint(&k);
            let alg = semidirect(&k, &rep)?.0.with_labels(["l1", "l2", "l3", "p1", "p2", "p3"]);
            let mut e = CatalogEntry::new(name, alg)
                .with_ideal("translations", &[unit(6, 3), unit(6, 4), unit(6, 5)])
                .with_sigma(&[0, 0, 1, 0, 0, 1]);
            e.semidirect = Some((k, rep));
            e
        }
        "oscillator" => {
            let e2 = catalog("e2")?.algebra;
            let mut form = Matrix::zeros(3, 3);
            form[(1, 2)] = Rat::from_integer(1.into());
            form[(2, 1)] = Rat::from_integer((-1).into());
            let alg = central_extension(&e2, &Cocycle2::new(&e2, form)?)?;
            CatalogEntry::new(name, alg)
                .with_ideal("center", &[unit(4, 3)])
                .with_ideal("heisenberg", &[unit(4, 1), unit(4, 2), unit(4, 3)])
                .with_sigma(&[0, 0, 0, 1])
        }
        "sl2-q2" => {
            let k = sl2();
            let rep = sl2_standard(&k);
            let alg = semidirect(&k, &rep)?.0;
            let mut e = CatalogEntry::new(name, alg)
                .with_ideal("v", &[unit(5, 3), unit(5, 4)])
                .with_sigma(&[0, 0, 0, 1, 0]);
            e.semidirect = Some((k, rep));
            e
        }
        "filiform4" => {
            let alg = LieAlgebra::new(4, &[(0, 1, from_ints(&[0, 0, 1, 0])), (0, 2, from_ints(&[0, 0, 0, 1]))])?;
            CatalogEntry::new(name, alg)
                .with_ideal("abelian", &[unit(4, 1), unit(4, 2), unit(4, 3)])
                .with_ideal("derived", &[unit(4, 2), unit(4, 3)])
                .with_ideal("center", &[unit(4, 3)])
                .with_sigma(&[0, 0, 0, 1])
        }
        "heisenberg3+ab1" => CatalogEntry::new(name, direct_sum(&heisenberg3(), &LieAlgebra::abelian(1)))
            .with_ideal("center", &[unit(4, 2), unit(4, 3)])
            .with_ideal("derived", &[unit(4, 2)])
            .with_sigma(&[0, 0, 1, 1]),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(e)
}

fn heisenberg3() -> LieAlgebra {
    LieAlgebra::new(3, &[(0, 1, from_ints(&[0, 0, 1]))]).expect("h3").with_labels(["x", "y", "z"])
}

/// Basis `(h, e, f)`.
fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        3,
        &[(0, 1, from_ints(&[0, 2, 0])), (0, 2, from_ints(&[0, 0, -2])), (1, 2, from_ints(&[1, 0, 0]))],
    )
    .expect("sl2")
    .with_labels(["h", "e", "f"])
}

/// Basis `(h, e, f, c)` with `c` the identity matrix.
fn gl2() -> LieAlgebra {
    direct_sum(&sl2(), &LieAlgebra::abelian(1)).with_labels(["h", "e", "f", "c"])
}

fn aff1() -> LieAlgebra {
    LieAlgebra::new(2, &[(0, 1, from_ints(&[0, 1]))]).expect("aff1").with_labels(["t", "x"])
}

fn so3() -> LieAlgebra {
    LieAlgebra::new(
        3,
        &[(0, 1, from_ints(&[0, 0, 1])), (1, 2, from_ints(&[1, 0, 0])), (2, 0, from_ints(&[0, 1, 0]))],
    )
    .expect("so3")
    .with_labels(["l1", "l2", "l3"])
}

fn e2_parts() -> (LieAlgebra, Representation) {
    let so2 = LieAlgebra::abelian(1).with_labels(["r"]);
    let rep = Representation::new(&so2, vec![Matrix::from_ints(&[&[0, -1], &[1, 0]])]).expect("rotation");
    (so2, rep)
}

/// The defining representation of `sl2` on `Q^2`.
pub fn sl2_standard(sl2: &LieAlgebra) -> Representation {
    Representation::new(
        sl2,
        vec![
            Matrix::from_ints(&[&[1, 0], &[0, -1]]),
            Matrix::from_ints(&[&[0, 1], &[0, 0]]),
            Matrix::from_ints(&[&[0, 0], &[1, 0]]),
        ],
    )
    .expect("standard sl2 representation")
}

/// The defining representation of `aff1` on `Q^2`.
pub fn aff1_standard(aff1: &LieAlgebra) -> Representation {
    Representation::new(aff1, vec![Matrix::from_ints(&[&[1, 0], &[0, 0]]), Matrix::from_ints(&[&[0, 1], &[0, 0]])])
        .expect("standard aff1 representation")
}
