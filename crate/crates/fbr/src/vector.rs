//! Finitely supported signed coefficient vectors over the non-basepoint
//! points of a pointed metric space, kept in canonical sparse form (no
//! stored zeros). Coefficients on the basepoint are dropped on input since
//! the transport norm is invariant under them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::metric::{PointedMetricSpace, SpaceToken};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct FreeVector<S> {
    space: SpaceToken,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> FreeVector<S> {
    pub fn zero(space: &PointedMetricSpace<S>) -> Self {
        FreeVector {
            space: space.token(),
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a vector from `(point index, coefficient)` pairs. Duplicate
    /// indices accumulate, zeros are pruned, and basepoint entries are
    /// dropped; the returned flag is true when any were.
    pub fn from_indexed(
        space: &PointedMetricSpace<S>,
        entries: impl IntoIterator<Item = (usize, S)>,
    ) -> Result<(Self, bool)> {
        let mut coeffs: BTreeMap<usize, S> = BTreeMap::new();
        let mut dropped = false;
        for (idx, c) in entries {
            if idx >= space.len() {
                return Err(Error::UnknownPoint(format!("index {idx}")));
            }
            if idx == 0 {
                dropped = true;
                continue;
            }
            let entry = coeffs.entry(idx).or_insert_with(S::zero);
            *entry = entry.clone() + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok((
            FreeVector {
                space: space.token(),
                coeffs,
            },
            dropped,
        ))
    }

    pub fn from_named(
        space: &PointedMetricSpace<S>,
        entries: &[(&str, S)],
    ) -> Result<(Self, bool)> {
        let mut indexed = Vec::with_capacity(entries.len());
        for (name, c) in entries {
            let idx = space
                .index_of(name)
                .ok_or_else(|| Error::UnknownPoint(name.to_string()))?;
            indexed.push((idx, c.clone()));
        }
        Self::from_indexed(space, indexed)
    }

    /// Single point with coefficient 1.
    pub fn point(space: &PointedMetricSpace<S>, name: &str) -> Result<Self> {
        Ok(Self::from_named(space, &[(name, S::one())])?.0)
    }

    pub fn space_token(&self) -> SpaceToken {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> S {
        self.coeffs.get(&idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    /// Support as point indices, basepoint excluded by construction.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of absolute coefficient values.
    pub fn total_mass(&self) -> S {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut coeffs = self.coeffs.clone();
        for (idx, c) in &other.coeffs {
            let entry = coeffs.entry(*idx).or_insert_with(S::zero);
            *entry = entry.clone() + c.clone();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(FreeVector {
            space: self.space,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        FreeVector {
            space: self.space,
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (*i, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return FreeVector {
                space: self.space,
                coeffs: BTreeMap::new(),
            };
        }
        FreeVector {
            space: self.space,
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, c)| (*i, factor.clone() * c.clone()))
                .collect(),
        }
    }

    /// Renders the vector in the compact text form, e.g. `1*a - 1*b`.
    pub fn display(&self, space: &PointedMetricSpace<S>) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (idx, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push_str("-");
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format!("{}*{}", c.abs(), space.name(*idx)));
        }
        out
    }
}

/// Parses the compact vector format: terms `coeff*name` joined by `+`/`-`,
/// with rational or decimal coefficients, e.g. `1*a - 1*b` or `3/2*a`.
/// A bare name means coefficient 1. Point names must not contain
/// `+ - * /` or whitespace.
pub fn parse_vector<S: Scalar>(
    space: &PointedMetricSpace<S>,
    text: &str,
) -> Result<(FreeVector<S>, bool)> {
    let mut entries: Vec<(usize, S)> = Vec::new();
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok((FreeVector::zero(space), false));
    }
    let mut rest = text;
    let mut sign = S::one();
    loop {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -S::one();
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = S::one();
            rest = r;
        }
        rest = rest.trim_start();
        if rest.is_empty() {
            return Err(Error::Parse("dangling sign in vector".into()));
        }
        let term_end = rest
            .char_indices()
            .find(|(i, ch)| (*ch == '+' || *ch == '-') && *i > 0)
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..term_end].trim();
        let (coeff, name) = match term.rsplit_once('*') {
            Some((c, n)) => {
                let parsed = S::parse_text(c)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient `{c}`")))?;
                (parsed, n.trim())
            }
            None => (S::one(), term),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!("missing point name in `{term}`")));
        }
        let idx = space
            .index_of(name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))?;
        entries.push((idx, sign.clone() * coeff));
        if term_end == rest.len() {
            break;
        }
        rest = &rest[term_end..];
        sign = S::one();
    }
    FreeVector::from_indexed(space, entries)
}
