//! Lie algebras given by structure constants in a labeled basis.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, Scalar};

/// Formal physical dimension L^length T^time M^mass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Dimension {
    pub length: i8,
    pub time: i8,
    pub mass: i8,
}

impl Dimension {
    pub const NONE: Dimension = Dimension { length: 0, time: 0, mass: 0 };

    pub const fn new(length: i8, time: i8, mass: i8) -> Self {
        Dimension { length, time, mass }
    }

    /// Dimension of a product, the monoid operation.
    pub fn times(self, other: Dimension) -> Dimension {
        Dimension::new(self.length + other.length, self.time + other.time, self.mass + other.mass)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("L", self.length), ("T", self.time), ("M", self.mass)]
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorLabel {
    pub name: String,
    pub dimension: Dimension,
}

impl GeneratorLabel {
    pub fn new(name: &str, dimension: Dimension) -> Self {
        GeneratorLabel { name: name.to_string(), dimension }
    }
}

/// C_ij^k stored densely, with a sparse view of the nonzero brackets.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    basis: Vec<GeneratorLabel>,
    c: Vec<Rational>,
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl StructureConstants {
    /// Builds from a dense array indexed `c[(i * dim + j) * dim + k]`.
    pub fn from_dense(basis: Vec<GeneratorLabel>, c: Vec<Rational>) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("an algebra needs at least one generator".into()));
        }
        check_unique(&basis)?;
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: c.len() });
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = &c[(i * dim + j) * dim + k];
                    let b = &c[(j * dim + i) * dim + k];
                    if !(a.clone() + b.clone()).is_zero() {
                        return Err(Error::InvalidParameter(format!(
                            "structure constants not antisymmetric at ({}, {}; {})",
                            basis[i].name, basis[j].name, basis[k].name
                        )));
                    }
                }
            }
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !c[ij * dim + k].is_zero())
                    .map(|k| (k, c[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Ok(StructureConstants { basis, c, sparse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GeneratorLabel] {
        &self.basis
    }

    pub fn names(&self) -> Vec<&str> {
        self.basis.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.c[(i * d + j) * d + k]
    }

    /// C_ab^c by generator names.
    pub fn coefficient_by_name(&self, a: &str, b: &str, c: &str) -> Result<Rational> {
        Ok(self.coefficient(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?).clone())
    }

    /// Nonzero (k, C_ij^k) pairs.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim() + j]
    }

    pub fn dense(&self) -> &[Rational] {
        &self.c
    }

    /// A builder preloaded with these brackets, for derived or corrupted copies.
    pub fn to_builder(&self) -> AlgebraBuilder {
        AlgebraBuilder {
            basis: self.basis.clone(),
            index: self.basis.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect(),
            c: self.c.clone(),
        }
    }

    /// Exhaustive Jacobi check. C is antisymmetric, so the Jacobiator is totally
    /// antisymmetric in (i, j, k) and the triples i < j < k cover every case.
    pub fn check_jacobi(&self) -> Vec<JacobiViolation> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut residual = vec![Rational::zero(); d];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, c1) in self.bracket_terms(a, b) {
                            for (l, c2) in self.bracket_terms(*m, c) {
                                residual[*l] += c1 * c2;
                            }
                        }
                    }
                    if residual.iter().any(|r| !r.is_zero()) {
                        let magnitude = residual.iter().map(|r| r.abs()).max().unwrap_or_else(Rational::zero);
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            labels: [i, j, k].map(|x| self.basis[x].name.clone()),
                            residual,
                            magnitude,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.check_jacobi().is_empty()
    }
}

fn check_unique(basis: &[GeneratorLabel]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for g in basis {
        if !seen.insert(g.name.as_str()) {
            return Err(Error::DuplicateGenerator(g.name.clone()));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub labels: [String; 3],
    /// Jacobiator components along each basis vector.
    pub residual: Vec<Rational>,
    pub magnitude: Rational,
}

/// Assembles structure constants bracket by bracket; [b,a] is filled in as -[a,b].
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    basis: Vec<GeneratorLabel>,
    index: HashMap<String, usize>,
    c: Vec<Rational>,
}

impl AlgebraBuilder {
    pub fn new(basis: Vec<GeneratorLabel>) -> Result<Self> {
        check_unique(&basis)?;
        let d = basis.len();
        Ok(AlgebraBuilder {
            index: basis.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect(),
            basis,
            c: vec![Rational::zero(); d * d * d],
        })
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Sets [a, b] = sum of coeff * gen, replacing any previous value.
    pub fn set(&mut self, a: &str, b: &str, terms: &[(&str, Rational)]) -> Result<&mut Self> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        if i == j {
            if terms.iter().all(|(_, c)| c.is_zero()) {
                return Ok(self);
            }
            return Err(Error::InvalidParameter(format!("[{a},{a}] must vanish")));
        }
        let d = self.basis.len();
        for k in 0..d {
            self.c[(i * d + j) * d + k] = Rational::zero();
            self.c[(j * d + i) * d + k] = Rational::zero();
        }
        for (g, coeff) in terms {
            let k = self.idx(g)?;
            self.c[(i * d + j) * d + k] += coeff.clone();
            self.c[(j * d + i) * d + k] -= coeff.clone();
        }
        Ok(self)
    }

    pub fn build(self) -> Result<StructureConstants> {
        StructureConstants::from_dense(self.basis, self.c)
    }
}

/// An element X = e_i X^i of the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<T> {
    pub coords: Vec<T>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn new(alg: &StructureConstants, coords: Vec<T>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: coords.len() });
        }
        Ok(AlgebraElement { coords })
    }

    pub fn zero(alg: &StructureConstants) -> Self {
        AlgebraElement { coords: vec![T::zero(); alg.dim()] }
    }

    /// The basis vector with the given generator name.
    pub fn generator(alg: &StructureConstants, name: &str) -> Result<Self> {
        let mut e = Self::zero(alg);
        e.coords[alg.index_of(name)?] = T::one();
        Ok(e)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn linear_combination(a: &T, x: &Self, b: &T, y: &Self) -> Self {
        AlgebraElement {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .map(|(u, v)| a.clone() * u.clone() + b.clone() * v.clone())
                .collect(),
        }
    }
}

/// [x, y]^k = C_ij^k x^i y^j.
pub fn bracket<T: Scalar>(
    alg: &StructureConstants,
    x: &AlgebraElement<T>,
    y: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    let d = alg.dim();
    for v in [x, y] {
        if v.coords.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: v.coords.len() });
        }
    }
    let mut z = vec![T::zero(); d];
    for i in 0..d {
        if x.coords[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if y.coords[j].is_zero() {
                continue;
            }
            let xy = x.coords[i].clone() * y.coords[j].clone();
            for (k, c) in alg.bracket_terms(i, j) {
                z[*k] = z[*k].clone() + T::from_rational(c) * xy.clone();
            }
        }
    }
    Ok(AlgebraElement { coords: z })
}

/// Matrix of ad_X in the basis, (ad_X)_{ki} = X^j C_ji^k.
pub fn adjoint_matrix<T: Scalar>(alg: &StructureConstants, x: &AlgebraElement<T>) -> crate::linalg::Matrix<T> {
    let d = alg.dim();
    let mut m = crate::linalg::Matrix::<T>::zeros(d, d);
    for j in 0..d {
        if x.coords[j].is_zero() {
            continue;
        }
        for i in 0..d {
            for (k, c) in alg.bracket_terms(j, i) {
                m[(*k, i)] = m[(*k, i)].clone() + x.coords[j].clone() * T::from_rational(c);
            }
        }
    }
    m
}
