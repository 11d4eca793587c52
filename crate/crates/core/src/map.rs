//! Morphisms in either of the two ambient categories: finite sets with the
//! cartesian product, or finite-dimensional vector spaces with `⊗`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;
use crate::setfn::SetFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Set,
    Linear(FieldSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Map {
    Set(SetFn),
    Linear(ExactMatrix),
}

impl From<SetFn> for Map {
    fn from(f: SetFn) -> Self {
        Map::Set(f)
    }
}

impl From<ExactMatrix> for Map {
    fn from(m: ExactMatrix) -> Self {
        Map::Linear(m)
    }
}

impl Map {
    pub fn mode(&self) -> Mode {
        match self {
            Map::Set(_) => Mode::Set,
            Map::Linear(m) => Mode::Linear(m.field()),
        }
    }

    pub fn dom(&self) -> usize {
        match self {
            Map::Set(f) => f.dom(),
            Map::Linear(m) => m.cols(),
        }
    }

    pub fn cod(&self) -> usize {
        match self {
            Map::Set(f) => f.cod(),
            Map::Linear(m) => m.rows(),
        }
    }

    pub fn identity(mode: Mode, n: usize) -> Map {
        match mode {
            Mode::Set => Map::Set(SetFn::identity(n)),
            Mode::Linear(f) => Map::Linear(ExactMatrix::identity(f, n)),
        }
    }

    pub fn flip(mode: Mode, a: usize, b: usize) -> Map {
        match mode {
            Mode::Set => Map::Set(SetFn::flip(a, b)),
            Mode::Linear(f) => Map::Linear(ExactMatrix::flip(f, a, b)),
        }
    }

    pub fn as_set(&self) -> Option<&SetFn> {
        match self {
            Map::Set(f) => Some(f),
            Map::Linear(_) => None,
        }
    }

    pub fn as_linear(&self) -> Option<&ExactMatrix> {
        match self {
            Map::Linear(m) => Some(m),
            Map::Set(_) => None,
        }
    }

    /// Set maps become permutation-style matrices; linear maps must already
    /// live over `field`.
    pub fn linearize(&self, field: FieldSpec) -> Result<ExactMatrix> {
        match self {
            Map::Set(f) => Ok(ExactMatrix::from_setfn(field, f)),
            Map::Linear(m) if m.field() == field => Ok(m.clone()),
            Map::Linear(_) => Err(Error::FieldMismatch),
        }
    }

    /// The same map in `mode`; only set-to-linear conversion is possible.
    pub fn in_mode(&self, mode: Mode) -> Result<Map> {
        match (mode, self) {
            (Mode::Set, Map::Set(_)) => Ok(self.clone()),
            (Mode::Set, Map::Linear(_)) => Err(Error::ModeMismatch),
            (Mode::Linear(f), _) => Ok(Map::Linear(self.linearize(f)?)),
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Map) -> Result<Map> {
        match (self, g) {
            (Map::Set(a), Map::Set(b)) => Ok(Map::Set(a.compose(b)?)),
            (Map::Linear(a), Map::Linear(b)) => Ok(Map::Linear(a.compose(b)?)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn tensor(&self, g: &Map) -> Result<Map> {
        match (self, g) {
            (Map::Set(a), Map::Set(b)) => Ok(Map::Set(a.product(b))),
            (Map::Linear(a), Map::Linear(b)) => Ok(Map::Linear(a.kron(b)?)),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Map> {
        match self {
            Map::Set(f) => Ok(Map::Set(f.pow(k)?)),
            Map::Linear(m) => Ok(Map::Linear(m.pow(k)?)),
        }
    }

    pub fn inverse(&self) -> Option<Map> {
        match self {
            Map::Set(f) => f.inverse().map(Map::Set),
            Map::Linear(m) => m.inverse().map(Map::Linear),
        }
    }

    pub fn is_invertible(&self) -> bool {
        match self {
            Map::Set(f) => f.is_bijective(),
            Map::Linear(m) => m.is_invertible(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Map::Set(f) => f.dom() == f.cod() && f.fixed_points() == f.dom(),
            Map::Linear(m) => m.is_identity(),
        }
    }

    pub(crate) fn check_shape(&self, context: &'static str, dom: usize, cod: usize) -> Result<()> {
        if self.dom() != dom {
            return Err(Error::dims(context, dom, self.dom()));
        }
        if self.cod() != cod {
            return Err(Error::dims(context, cod, self.cod()));
        }
        Ok(())
    }

    pub(crate) fn check_mode(&self, mode: Mode) -> Result<()> {
        match (self.mode(), mode) {
            (Mode::Set, Mode::Set) => Ok(()),
            (Mode::Linear(a), Mode::Linear(b)) if a == b => Ok(()),
            (Mode::Linear(_), Mode::Linear(_)) => Err(Error::FieldMismatch),
            _ => Err(Error::ModeMismatch),
        }
    }
}
