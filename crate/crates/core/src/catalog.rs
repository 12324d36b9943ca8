//! The planar kinematical algebras and their extensions.
//!
//! Basis orders: isotropic (J, K1, K2, P1, P2, H); anisotropic (K1, K2, P1, P2, H);
//! extensions append (M, S) then (F1, F2, Pi1, Pi2, M', B, Lambda) as applicable.
//! Rotations act as [J, X_i] = eps_ij X_j, so [J, X1] = X2 and [J, X2] = -X1.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraBuilder, Dimension, GeneratorLabel, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraName {
    DeSitterPlus,
    DeSitterMinus,
    Poincare,
    NewtonHookePlus,
    NewtonHookeMinus,
    Galilei,
    ParaPoincarePlus,
    ParaPoincareMinus,
    Carroll,
    ParaGalileiPlus,
    ParaGalileiMinus,
    Static,
}

use AlgebraName::*;

impl AlgebraName {
    pub const ALL: [AlgebraName; 12] = [
        DeSitterPlus,
        DeSitterMinus,
        Poincare,
        NewtonHookePlus,
        NewtonHookeMinus,
        Galilei,
        ParaPoincarePlus,
        ParaPoincareMinus,
        Carroll,
        ParaGalileiPlus,
        ParaGalileiMinus,
        Static,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            DeSitterPlus => "dS+",
            DeSitterMinus => "dS-",
            Poincare => "P",
            NewtonHookePlus => "NH+",
            NewtonHookeMinus => "NH-",
            Galilei => "G",
            ParaPoincarePlus => "P'+",
            ParaPoincareMinus => "P'-",
            Carroll => "C",
            ParaGalileiPlus => "G'+",
            ParaGalileiMinus => "G'-",
            Static => "S",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            DeSitterPlus => "de Sitter",
            DeSitterMinus => "anti de Sitter",
            Poincare => "Poincare",
            NewtonHookePlus => "expanding Newton-Hooke",
            NewtonHookeMinus => "oscillating Newton-Hooke",
            Galilei => "Galilei",
            ParaPoincarePlus => "Para-Poincare",
            ParaPoincareMinus => "anti Para-Poincare",
            Carroll => "Carroll",
            ParaGalileiPlus => "Para-Galilei",
            ParaGalileiMinus => "anti Para-Galilei",
            Static => "Static",
        }
    }

    /// lambda in {0, 1}: whether boosts fail to commute with time translations.
    pub fn lambda(self) -> i64 {
        match self {
            DeSitterPlus | DeSitterMinus | Poincare | NewtonHookePlus | NewtonHookeMinus | Galilei => 1,
            _ => 0,
        }
    }

    /// Sign of beta = sign * omega^2.
    pub fn beta_sign(self) -> i64 {
        match self {
            DeSitterPlus | NewtonHookePlus | ParaPoincarePlus | ParaGalileiPlus => 1,
            DeSitterMinus | NewtonHookeMinus | ParaPoincareMinus | ParaGalileiMinus => -1,
            Poincare | Galilei | Carroll | Static => 0,
        }
    }

    /// Whether gamma = 1/c^2 (otherwise gamma = 0).
    pub fn relativistic(self) -> bool {
        matches!(
            self,
            DeSitterPlus | DeSitterMinus | Poincare | ParaPoincarePlus | ParaPoincareMinus | Carroll
        )
    }

    pub fn time_class(self) -> Absoluteness {
        if self.relativistic() {
            Absoluteness::Relative
        } else {
            Absoluteness::Absolute
        }
    }

    pub fn space_class(self) -> Absoluteness {
        if self.lambda() == 1 {
            Absoluteness::Relative
        } else {
            Absoluteness::Absolute
        }
    }

    fn valid_choices() -> String {
        Self::ALL.iter().map(|n| n.symbol()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for AlgebraName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace(['\u{2212}', '\u{2013}'], "-").replace('\u{2032}', "'");
        let by_symbol = Self::ALL.iter().find(|n| n.symbol() == norm);
        if let Some(n) = by_symbol {
            return Ok(*n);
        }
        let alias = match norm.to_ascii_lowercase().as_str() {
            "galilei" => Some(Galilei),
            "static" => Some(Static),
            "carroll" => Some(Carroll),
            "poincare" => Some(Poincare),
            "desitter" | "de-sitter" => Some(DeSitterPlus),
            "anti-desitter" | "anti-de-sitter" => Some(DeSitterMinus),
            "para-galilei" => Some(ParaGalileiPlus),
            "anti-para-galilei" => Some(ParaGalileiMinus),
            "para-poincare" => Some(ParaPoincarePlus),
            "anti-para-poincare" => Some(ParaPoincareMinus),
            "newton-hooke+" | "expanding-newton-hooke" => Some(NewtonHookePlus),
            "newton-hooke-" | "oscillating-newton-hooke" => Some(NewtonHookeMinus),
            _ => None,
        };
        alias.ok_or_else(|| Error::UnknownName { kind: "algebra", name: s.to_string(), valid: Self::valid_choices() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Absoluteness {
    Absolute,
    Relative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Isotropic,
    Anisotropic,
    CentralExt,
    NoncentralExt,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Isotropic, Variant::Anisotropic, Variant::CentralExt, Variant::NoncentralExt];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Isotropic => "isotropic",
            Variant::Anisotropic => "anisotropic",
            Variant::CentralExt => "central_ext",
            Variant::NoncentralExt => "noncentral_ext",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "isotropic" | "plain" => Ok(Variant::Isotropic),
            "anisotropic" => Ok(Variant::Anisotropic),
            "central_ext" | "central" => Ok(Variant::CentralExt),
            "noncentral_ext" | "noncentral" => Ok(Variant::NoncentralExt),
            _ => Err(Error::UnknownName {
                kind: "variant",
                name: s.to_string(),
                valid: Variant::ALL.map(Variant::as_str).join(", "),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraDescriptor {
    pub name: AlgebraName,
    pub variant: Variant,
}

impl AlgebraDescriptor {
    pub fn new(name: AlgebraName, variant: Variant) -> Result<Self> {
        let d = AlgebraDescriptor { name, variant };
        d.validate()?;
        Ok(d)
    }

    pub fn time_class(&self) -> Absoluteness {
        self.name.time_class()
    }

    pub fn space_class(&self) -> Absoluteness {
        self.name.space_class()
    }

    /// Rotations drop out when they never appear on a right-hand side:
    /// lambda*gamma = beta*gamma = 0.
    fn admits_anisotropy(name: AlgebraName) -> bool {
        !name.relativistic() || (name.lambda() == 0 && name.beta_sign() == 0)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.name;
        match self.variant {
            Variant::Isotropic => Ok(()),
            Variant::Anisotropic | Variant::CentralExt if !Self::admits_anisotropy(n) => Err(Error::Inadmissible(format!(
                "{} variant of {n} requires rotations to drop out of every bracket; \
                 only absolute-time algebras and Carroll qualify",
                self.variant
            ))),
            Variant::NoncentralExt if n.time_class() != Absoluteness::Absolute => Err(Error::Inadmissible(format!(
                "noncentral_ext of {n} is only defined for absolute-time algebras (NH+, NH-, G, G'+, G'-, S)"
            ))),
            _ => Ok(()),
        }
    }

    pub fn admissible_variants(name: AlgebraName) -> Vec<Variant> {
        Variant::ALL
            .into_iter()
            .filter(|v| AlgebraDescriptor { name, variant: *v }.validate().is_ok())
            .collect()
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name, self.variant)
    }
}

/// Couplings of the extension generators. All ones give the printed brackets;
/// all zeros recover the unextended algebra on the shared basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Charges {
    /// brackets landing on M
    pub mass: Rational,
    /// brackets landing on S
    pub spin: Rational,
    /// brackets landing on F and Pi
    pub vector: Rational,
    /// brackets landing on M', B and Lambda
    pub secondary: Rational,
}

impl Default for Charges {
    fn default() -> Self {
        Charges { mass: int(1), spin: int(1), vector: int(1), secondary: int(1) }
    }
}

impl Charges {
    pub fn zero() -> Self {
        Charges { mass: int(0), spin: int(0), vector: int(0), secondary: int(0) }
    }
}

/// Curvatures and speed, with derived lambda, beta, gamma per algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct KinematicalParams {
    /// time curvature, T^-1
    pub omega: Rational,
    /// space curvature, L^-1
    pub kappa: Rational,
    /// velocity, L T^-1
    pub c: Rational,
    pub charges: Charges,
}

impl KinematicalParams {
    /// c must be nonzero, and c = omega/kappa whenever omega is nonzero.
    pub fn new(omega: Rational, kappa: Rational, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidParameter("the speed c must be nonzero".into()));
        }
        if !omega.is_zero() && c.clone() * kappa.clone() != omega {
            return Err(Error::InvalidParameter(format!("c = omega/kappa is required when omega != 0 (omega={omega}, kappa={kappa}, c={c})")));
        }
        Ok(KinematicalParams { omega, kappa, c, charges: Charges::default() })
    }

    /// Both curvatures nonzero, c = omega/kappa.
    pub fn from_curvatures(omega: Rational, kappa: Rational) -> Result<Self> {
        if omega.is_zero() || kappa.is_zero() {
            return Err(Error::InvalidParameter("from_curvatures needs omega and kappa nonzero".into()));
        }
        let c = omega.clone() / kappa.clone();
        Self::new(omega, kappa, c)
    }

    pub fn with_charges(mut self, charges: Charges) -> Self {
        self.charges = charges;
        self
    }

    pub fn lambda(&self, name: AlgebraName) -> Rational {
        int(name.lambda())
    }

    pub fn beta(&self, name: AlgebraName) -> Rational {
        int(name.beta_sign()) * self.omega.clone() * self.omega.clone()
    }

    pub fn gamma(&self, name: AlgebraName) -> Rational {
        if name.relativistic() {
            self.inv_c2()
        } else {
            Rational::zero()
        }
    }

    /// alpha = beta * gamma
    pub fn alpha(&self, name: AlgebraName) -> Rational {
        self.beta(name) * self.gamma(name)
    }

    /// mu = -lambda * gamma
    pub fn mu(&self, name: AlgebraName) -> Rational {
        -(self.lambda(name) * self.gamma(name))
    }

    pub fn inv_c2(&self) -> Rational {
        Rational::one() / (self.c.clone() * self.c.clone())
    }

    pub fn kappa2(&self) -> Rational {
        self.kappa.clone() * self.kappa.clone()
    }
}

pub mod dims {
    use crate::algebra::Dimension;
    pub const J: Dimension = Dimension::NONE;
    pub const K: Dimension = Dimension::new(-1, 1, 0);
    pub const P: Dimension = Dimension::new(-1, 0, 0);
    pub const H: Dimension = Dimension::new(0, -1, 0);
    pub const M: Dimension = Dimension::new(-2, 1, 0);
    pub const S: Dimension = Dimension::NONE;
    pub const F: Dimension = Dimension::new(-1, -1, 0);
    pub const PI: Dimension = Dimension::new(-1, 0, 0);
    pub const M_PRIME: Dimension = Dimension::new(-2, 1, 0);
    pub const B: Dimension = Dimension::new(-2, 0, 0);
    pub const LAMBDA: Dimension = Dimension::new(-2, -1, 0);
}

fn labels(entries: &[(&str, Dimension)]) -> Vec<GeneratorLabel> {
    entries.iter().map(|(n, d)| GeneratorLabel::new(n, *d)).collect()
}

fn vector(prefix: &str, d: Dimension) -> [(String, Dimension); 2] {
    [(format!("{prefix}1"), d), (format!("{prefix}2"), d)]
}

fn basis_for(rotation: bool, extra: &[(&str, Dimension)]) -> Vec<GeneratorLabel> {
    let mut v: Vec<(String, Dimension)> = Vec::new();
    if rotation {
        v.push(("J".into(), dims::J));
    }
    v.extend(vector("K", dims::K));
    v.extend(vector("P", dims::P));
    v.push(("H".into(), dims::H));
    for (n, d) in extra {
        if n.ends_with('*') {
            v.extend(vector(n.trim_end_matches('*'), *d));
        } else {
            v.push((n.to_string(), *d));
        }
    }
    let refs: Vec<(&str, Dimension)> = v.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    labels(&refs)
}

/// Helper for writing vector brackets in components.
struct Brackets {
    b: AlgebraBuilder,
}

impl Brackets {
    fn new(basis: Vec<GeneratorLabel>) -> Result<Self> {
        Ok(Brackets { b: AlgebraBuilder::new(basis)? })
    }

    /// [J, X_i] = eps_ij X_j
    fn rotate(&mut self, x: &str) -> Result<()> {
        self.b.set("J", &format!("{x}1"), &[(&format!("{x}2"), int(1))])?;
        self.b.set("J", &format!("{x}2"), &[(&format!("{x}1"), int(-1))])?;
        Ok(())
    }

    /// [X_1, X_2] = c * target (the eps_ij part of [X_i, X_j])
    fn antisym(&mut self, x: &str, target: &str, c: &Rational) -> Result<()> {
        if !c.is_zero() {
            self.b.set(&format!("{x}1"), &format!("{x}2"), &[(target, c.clone())])?;
        }
        Ok(())
    }

    /// [X_i, Y_j] = c * target * delta_ij
    fn diagonal(&mut self, x: &str, y: &str, target: &str, c: &Rational) -> Result<()> {
        if !c.is_zero() {
            for i in 1..=2 {
                self.b.set(&format!("{x}{i}"), &format!("{y}{i}"), &[(target, c.clone())])?;
            }
        }
        Ok(())
    }

    /// [X_i, s] = c * Y_i for a scalar generator s
    fn vector_scalar(&mut self, x: &str, s: &str, y: &str, c: &Rational) -> Result<()> {
        if !c.is_zero() {
            for i in 1..=2 {
                self.b.set(&format!("{x}{i}"), s, &[(&format!("{y}{i}"), c.clone())])?;
            }
        }
        Ok(())
    }

    fn build(self) -> Result<StructureConstants> {
        self.b.build()
    }
}

/// Structure constants of `desc` at the given parameters.
pub fn build(desc: &AlgebraDescriptor, params: &KinematicalParams) -> Result<StructureConstants> {
    desc.validate()?;
    match desc.variant {
        Variant::Isotropic => kinematical(desc.name, params, true),
        Variant::Anisotropic => kinematical(desc.name, params, false),
        Variant::CentralExt => central_extension(desc.name, params),
        Variant::NoncentralExt => noncentral_extension(desc.name, params),
    }
}

fn kinematical(name: AlgebraName, p: &KinematicalParams, rotation: bool) -> Result<StructureConstants> {
    let (lambda, beta, gamma) = (p.lambda(name), p.beta(name), p.gamma(name));
    let mut b = Brackets::new(basis_for(rotation, &[]))?;
    if rotation {
        b.rotate("K")?;
        b.rotate("P")?;
        b.antisym("K", "J", &p.mu(name))?;
        b.antisym("P", "J", &p.alpha(name))?;
    }
    b.diagonal("K", "P", "H", &gamma)?;
    b.vector_scalar("K", "H", "P", &lambda)?;
    b.vector_scalar("P", "H", "K", &beta)?;
    b.build()
}

/// The two-parameter central-extension ansatz on (K, P, H, M, S):
/// [K_i,K_j] = (mu/c^2) S eps_ij, [K_i,P_j] = M delta_ij, [P_i,P_j] = kappa^2 alpha S eps_ij,
/// [K_i,H] = lambda P_i, [P_i,H] = beta K_i. Jacobi holds iff mu beta / c^2 = -kappa^2 lambda alpha.
pub fn extension_ansatz(
    lambda: &Rational,
    beta: &Rational,
    mu: &Rational,
    alpha: &Rational,
    p: &KinematicalParams,
) -> Result<StructureConstants> {
    let ch = &p.charges;
    let mut b = Brackets::new(basis_for(false, &[("M", dims::M), ("S", dims::S)]))?;
    b.antisym("K", "S", &(mu.clone() * p.inv_c2() * ch.spin.clone()))?;
    b.antisym("P", "S", &(alpha.clone() * p.kappa2() * ch.spin.clone()))?;
    b.diagonal("K", "P", "M", &ch.mass)?;
    b.vector_scalar("K", "H", "P", lambda)?;
    b.vector_scalar("P", "H", "K", beta)?;
    b.build()
}

fn central_extension(name: AlgebraName, p: &KinematicalParams) -> Result<StructureConstants> {
    let (lambda, beta) = (p.lambda(name), p.beta(name));
    if name == Carroll {
        let mut b = Brackets::new(basis_for(false, &[("S", dims::S)]))?;
        b.antisym("K", "S", &(p.inv_c2() * p.charges.spin.clone()))?;
        b.antisym("P", "S", &(p.kappa2() * p.charges.spin.clone()))?;
        b.diagonal("K", "P", "H", &p.inv_c2())?;
        return b.build();
    }
    let (mu, alpha) = match name {
        NewtonHookePlus => (int(1), int(-1)),
        NewtonHookeMinus => (int(1), int(1)),
        Galilei => (int(1), int(0)),
        ParaGalileiPlus | ParaGalileiMinus => (int(0), int(1)),
        Static => (int(1), int(1)),
        _ => unreachable!("validated above"),
    };
    extension_ansatz(&lambda, &beta, &mu, &alpha, p)
}

fn noncentral_extension(name: AlgebraName, p: &KinematicalParams) -> Result<StructureConstants> {
    let ch = &p.charges;
    let beta = p.beta(name);
    let spin_k = p.inv_c2() * ch.spin.clone();
    match name {
        NewtonHookePlus | NewtonHookeMinus => {
            let mut b = Brackets::new(basis_for(true, &[("M", dims::M), ("S", dims::S)]))?;
            b.rotate("K")?;
            b.rotate("P")?;
            b.antisym("K", "S", &spin_k)?;
            let sign = int(-name.beta_sign());
            b.antisym("P", "S", &(sign * p.kappa2() * ch.spin.clone()))?;
            b.diagonal("K", "P", "M", &ch.mass)?;
            b.vector_scalar("K", "H", "P", &int(1))?;
            b.vector_scalar("P", "H", "K", &beta)?;
            b.build()
        }
        Galilei => {
            let mut b = Brackets::new(basis_for(true, &[("M", dims::M), ("S", dims::S), ("F*", dims::F)]))?;
            for x in ["K", "P", "F"] {
                b.rotate(x)?;
            }
            b.antisym("K", "S", &spin_k)?;
            b.diagonal("K", "P", "M", &ch.mass)?;
            b.vector_scalar("K", "H", "P", &int(1))?;
            b.vector_scalar("P", "H", "F", &ch.vector)?;
            b.build()
        }
        ParaGalileiPlus | ParaGalileiMinus => {
            let mut b = Brackets::new(basis_for(true, &[("M", dims::M), ("S", dims::S), ("Pi*", dims::PI)]))?;
            for x in ["K", "P", "Pi"] {
                b.rotate(x)?;
            }
            b.antisym("P", "S", &(p.kappa2() * ch.spin.clone()))?;
            b.diagonal("K", "P", "M", &ch.mass)?;
            b.vector_scalar("K", "H", "Pi", &ch.vector)?;
            b.vector_scalar("P", "H", "K", &beta)?;
            b.build()
        }
        Static => {
            let mut b = Brackets::new(basis_for(
                true,
                &[
                    ("M", dims::M),
                    ("F*", dims::F),
                    ("Pi*", dims::PI),
                    ("M'", dims::M_PRIME),
                    ("B", dims::B),
                    ("Lambda", dims::LAMBDA),
                ],
            ))?;
            for x in ["K", "P", "F", "Pi"] {
                b.rotate(x)?;
            }
            b.diagonal("K", "P", "M", &ch.mass)?;
            b.diagonal("K", "F", "B", &ch.secondary)?;
            b.diagonal("P", "F", "Lambda", &ch.secondary)?;
            b.diagonal("K", "Pi", "M'", &ch.secondary)?;
            b.diagonal("P", "Pi", "B", &ch.secondary)?;
            b.vector_scalar("K", "H", "Pi", &ch.vector)?;
            b.vector_scalar("P", "H", "F", &ch.vector)?;
            b.build()
        }
        _ => unreachable!("validated above"),
    }
}

/// Admissible (mu, alpha) for the central-extension ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionConstraint {
    /// mu = -alpha (lambda = 1, beta = +omega^2)
    MuEqualsMinusAlpha,
    /// mu = +alpha (lambda = 1, beta = -omega^2)
    MuEqualsAlpha,
    /// alpha = 0, mu free (lambda = 1, beta = 0)
    AlphaZero,
    /// mu = 0, alpha free (lambda = 0, beta = +-omega^2)
    MuZero,
    /// no constraint (lambda = 0, beta = 0)
    Free,
}

impl ExtensionConstraint {
    pub fn admits(&self, mu: &Rational, alpha: &Rational) -> bool {
        match self {
            Self::MuEqualsMinusAlpha => *mu == -alpha.clone(),
            Self::MuEqualsAlpha => mu == alpha,
            Self::AlphaZero => alpha.is_zero(),
            Self::MuZero => mu.is_zero(),
            Self::Free => true,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Self::MuEqualsMinusAlpha => "mu = -alpha",
            Self::MuEqualsAlpha => "mu = alpha",
            Self::AlphaZero => "alpha = 0, mu free",
            Self::MuZero => "mu = 0, alpha free",
            Self::Free => "mu, alpha free",
        }
    }
}

/// Solves mu beta / c^2 = -kappa^2 lambda alpha with c = omega/kappa.
pub fn admissible_central_extensions(lambda: &Rational, beta: &Rational, omega: &Rational) -> Result<ExtensionConstraint> {
    let w2 = omega.clone() * omega.clone();
    let sign = if beta.is_zero() {
        0
    } else if !w2.is_zero() && *beta == w2 {
        1
    } else if !w2.is_zero() && *beta == -w2.clone() {
        -1
    } else {
        return Err(Error::InvalidParameter(format!("beta must be one of +omega^2, 0, -omega^2 (beta={beta}, omega={omega})")));
    };
    let l = if lambda.is_zero() {
        0
    } else if lambda.is_one() {
        1
    } else {
        return Err(Error::InvalidParameter(format!("lambda must be 0 or 1, got {lambda}")));
    };
    Ok(match (l, sign) {
        (1, 1) => ExtensionConstraint::MuEqualsMinusAlpha,
        (1, -1) => ExtensionConstraint::MuEqualsAlpha,
        (1, _) => ExtensionConstraint::AlphaZero,
        (_, 0) => ExtensionConstraint::Free,
        _ => ExtensionConstraint::MuZero,
    })
}

/// Machine-readable catalog listing.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub long_name: &'static str,
    pub variant: Variant,
    pub dim: usize,
    pub time_class: Absoluteness,
    pub space_class: Absoluteness,
    pub basis: Vec<String>,
    pub parameter_slots: Vec<&'static str>,
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    let params = KinematicalParams::from_curvatures(int(1), int(1)).expect("unit curvatures");
    let mut out = Vec::new();
    for name in AlgebraName::ALL {
        for variant in AlgebraDescriptor::admissible_variants(name) {
            let desc = AlgebraDescriptor { name, variant };
            let alg = build(&desc, &params).expect("catalog entry builds");
            let nonzero = |a: &str, b: &str| {
                let (i, j) = (alg.index_of(a), alg.index_of(b));
                matches!((i, j), (Ok(i), Ok(j)) if !alg.bracket_terms(i, j).is_empty())
            };
            let mut slots = Vec::new();
            if nonzero("P1", "H") {
                slots.push("omega");
            }
            if nonzero("P1", "P2") {
                slots.push("kappa");
            }
            if nonzero("K1", "K2") || alg.coefficient_by_name("K1", "P1", "H").is_ok_and(|c| !c.is_zero()) {
                slots.push("c");
            }
            out.push(CatalogEntry {
                name: name.symbol(),
                long_name: name.long_name(),
                variant,
                dim: alg.dim(),
                time_class: name.time_class(),
                space_class: name.space_class(),
                basis: alg.names().into_iter().map(String::from).collect(),
                parameter_slots: slots,
            });
        }
    }
    out
}
