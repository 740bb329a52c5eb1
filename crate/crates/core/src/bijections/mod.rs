//! Bijections between restricted Motzkin path classes.
//!
//! Every map is a [`Bijection`] strategy with a recursive form (rewriting by
//! first-return decomposition), an explicit form (label and subtree moves on
//! the path's tree) and an inverse. A [`BijectionRegistry`] holds the
//! strategies by [`BijectionId`]; the CLI and the verification harness look
//! them up there, and tests swap in mutants.

pub mod exchange;
pub mod involution;
pub mod lift;
pub mod mirror;
pub mod slide;
mod tokens;
pub mod transfer;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::paths::{MotzkinPath, Pattern};

pub use exchange::LabelExchange;
pub use involution::{InvolutionForm, SegmentRule, UfuDdInvolution};
pub use lift::PlateauLift;
pub use mirror::Mirror;
pub use slide::FlipSlide;
pub use transfer::SubtreeTransfer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BijectionId {
    /// `M_n → M_n`, tree flip.
    B1,
    /// `M_n(UU) → M_{n+1}(UD)`, flip and label exchange.
    B2,
    /// `M_n(UU) → M_{n+1}(UD)`, token slide and subtree transfer.
    B3,
    /// `M_n(UU) → M_{n+1}(UD)`, flip and southwest token slide.
    B4,
    /// `M_n(DU) → M_{n+1}(UD)`, southwest token slide.
    B5,
    /// `M_n(UU) → M_n(UU)`, exchanges `#UFU` and `#DD`.
    Invol,
}

impl BijectionId {
    pub const ALL: [BijectionId; 6] =
        [BijectionId::B1, BijectionId::B2, BijectionId::B3, BijectionId::B4, BijectionId::B5, BijectionId::Invol];

    pub fn name(self) -> &'static str {
        match self {
            BijectionId::B1 => "B1",
            BijectionId::B2 => "B2",
            BijectionId::B3 => "B3",
            BijectionId::B4 => "B4",
            BijectionId::B5 => "B5",
            BijectionId::Invol => "INVOL",
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = BijectionError;

    /// Accepts `1`..`5`, `b1`..`b5`, and `invol` / `involution`, in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let digits = lower.strip_prefix('b').unwrap_or(&lower);
        Ok(match digits {
            "1" => BijectionId::B1,
            "2" => BijectionId::B2,
            "3" => BijectionId::B3,
            "4" => BijectionId::B4,
            "5" => BijectionId::B5,
            "invol" | "involution" => BijectionId::Invol,
            _ => return Err(BijectionError::UnknownBijection(s.to_string())),
        })
    }
}

/// Which description of a bijection to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    Recursive,
    Explicit,
    /// Evaluate both and fail unless they agree.
    #[default]
    Checked,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "recursive" => Ok(Mode::Recursive),
            "explicit" => Ok(Mode::Explicit),
            "checked" => Ok(Mode::Checked),
            other => Err(format!("unknown mode {other:?} (expected recursive, explicit or checked)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainReason {
    Contains { pattern: Pattern, position: usize },
    TooShort { min_len: usize },
}

impl fmt::Display for DomainReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainReason::Contains { pattern, position } => write!(f, "contains {pattern} at position {position}"),
            DomainReason::TooShort { min_len } => write!(f, "is shorter than {min_len}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{bijection}: input {input:?} is outside the domain: it {reason}")]
    DomainViolation { bijection: BijectionId, input: String, reason: DomainReason },
    #[error("{bijection}: recursive and explicit forms disagree on {input:?}: recursive {recursive:?}, explicit {explicit:?}")]
    ModeMismatch { bijection: BijectionId, input: String, recursive: String, explicit: String },
    #[error("{bijection}: inverse of {input:?} is {inverse:?} but mapping it forward gives {roundtrip:?}")]
    InverseMismatch { bijection: BijectionId, input: String, inverse: String, roundtrip: String },
    #[error("unknown bijection {0:?} (expected 1-5 or invol)")]
    UnknownBijection(String),
}

fn check_class(id: BijectionId, p: &MotzkinPath, avoid: &[Pattern], min_len: usize) -> Result<(), BijectionError> {
    if let Some((pattern, position)) = p.first_occurrence(avoid) {
        return Err(BijectionError::DomainViolation {
            bijection: id,
            input: p.to_string(),
            reason: DomainReason::Contains { pattern, position },
        });
    }
    if p.len() < min_len {
        return Err(BijectionError::DomainViolation {
            bijection: id,
            input: p.to_string(),
            reason: DomainReason::TooShort { min_len },
        });
    }
    Ok(())
}

/// One bijection between path classes, in both of its descriptions.
///
/// `recursive`, `explicit` and `invert` may assume their input lies in the
/// domain (resp. codomain); `apply` and `apply_inverse` check that eagerly.
pub trait Bijection: Send + Sync {
    fn id(&self) -> BijectionId;

    fn summary(&self) -> &'static str;

    /// Patterns every domain path avoids.
    fn domain(&self) -> &'static [Pattern];

    /// Patterns every image path avoids.
    fn codomain(&self) -> &'static [Pattern];

    /// Length of the image minus length of the input.
    fn length_shift(&self) -> usize;

    fn recursive(&self, p: &MotzkinPath) -> MotzkinPath;

    fn explicit(&self, p: &MotzkinPath) -> MotzkinPath;

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath;

    fn check_domain(&self, p: &MotzkinPath) -> Result<(), BijectionError> {
        check_class(self.id(), p, self.domain(), 0)
    }

    fn check_codomain(&self, q: &MotzkinPath) -> Result<(), BijectionError> {
        check_class(self.id(), q, self.codomain(), self.length_shift())
    }

    fn apply(&self, p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
        self.check_domain(p)?;
        match mode {
            Mode::Recursive => Ok(self.recursive(p)),
            Mode::Explicit => Ok(self.explicit(p)),
            Mode::Checked => {
                let recursive = self.recursive(p);
                let explicit = self.explicit(p);
                if recursive != explicit {
                    return Err(BijectionError::ModeMismatch {
                        bijection: self.id(),
                        input: p.to_string(),
                        recursive: recursive.to_string(),
                        explicit: explicit.to_string(),
                    });
                }
                Ok(explicit)
            }
        }
    }

    /// Inverts via the explicit description. In `Checked` mode the result is
    /// mapped forward again with the recursive form and must reproduce `q`.
    fn apply_inverse(&self, q: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
        self.check_codomain(q)?;
        let p = self.invert(q);
        if mode == Mode::Checked {
            let roundtrip = self.recursive(&p);
            if roundtrip != *q {
                return Err(BijectionError::InverseMismatch {
                    bijection: self.id(),
                    input: q.to_string(),
                    inverse: p.to_string(),
                    roundtrip: roundtrip.to_string(),
                });
            }
        }
        Ok(p)
    }
}

/// Bijection strategies keyed by id.
pub struct BijectionRegistry {
    entries: BTreeMap<BijectionId, Box<dyn Bijection>>,
}

impl BijectionRegistry {
    pub fn empty() -> Self {
        Self { entries: BTreeMap::new() }
    }

    /// All six standard maps.
    pub fn standard() -> Self {
        let mut registry = Self::empty();
        registry.register(Mirror);
        registry.register(LabelExchange);
        registry.register(SubtreeTransfer);
        registry.register(FlipSlide);
        registry.register(PlateauLift);
        registry.register(UfuDdInvolution::default());
        registry
    }

    /// Registers `bijection` under its id, returning whatever it replaced.
    pub fn register(&mut self, bijection: impl Bijection + 'static) -> Option<Box<dyn Bijection>> {
        self.entries.insert(bijection.id(), Box::new(bijection))
    }

    pub fn get(&self, id: BijectionId) -> Option<&dyn Bijection> {
        self.entries.get(&id).map(|b| b.as_ref())
    }

    pub fn lookup(&self, name: &str) -> Result<&dyn Bijection, BijectionError> {
        let id: BijectionId = name.parse()?;
        self.get(id).ok_or_else(|| BijectionError::UnknownBijection(name.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = BijectionId> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Bijection> {
        self.entries.values().map(|b| b.as_ref())
    }
}

impl Default for BijectionRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

pub fn b1(p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
    Mirror.apply(p, mode)
}

pub fn b2(p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
    LabelExchange.apply(p, mode)
}

pub fn b2_inverse(q: &MotzkinPath) -> Result<MotzkinPath, BijectionError> {
    LabelExchange.apply_inverse(q, Mode::Explicit)
}

pub fn b3(p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
    SubtreeTransfer.apply(p, mode)
}

pub fn b3_inverse(q: &MotzkinPath) -> Result<MotzkinPath, BijectionError> {
    SubtreeTransfer.apply_inverse(q, Mode::Explicit)
}

pub fn b4(p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
    FlipSlide.apply(p, mode)
}

pub fn b4_inverse(q: &MotzkinPath) -> Result<MotzkinPath, BijectionError> {
    FlipSlide.apply_inverse(q, Mode::Explicit)
}

pub fn b5(p: &MotzkinPath, mode: Mode) -> Result<MotzkinPath, BijectionError> {
    PlateauLift.apply(p, mode)
}

pub fn b5_inverse(q: &MotzkinPath) -> Result<MotzkinPath, BijectionError> {
    PlateauLift.apply_inverse(q, Mode::Explicit)
}

pub fn involution(p: &MotzkinPath, form: InvolutionForm) -> Result<MotzkinPath, BijectionError> {
    let inv = UfuDdInvolution::default();
    inv.check_domain(p)?;
    Ok(match form {
        InvolutionForm::Segment => inv.explicit(p),
        InvolutionForm::Composition => inv.recursive(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn ids_parse() {
        assert_eq!("1".parse::<BijectionId>().unwrap(), BijectionId::B1);
        assert_eq!("B4".parse::<BijectionId>().unwrap(), BijectionId::B4);
        assert_eq!("invol".parse::<BijectionId>().unwrap(), BijectionId::Invol);
        assert!("6".parse::<BijectionId>().is_err());
    }

    #[test]
    fn registry_lookup() {
        let reg = BijectionRegistry::standard();
        assert_eq!(reg.ids().count(), 6);
        for id in BijectionId::ALL {
            assert_eq!(reg.get(id).unwrap().id(), id);
        }
        assert_eq!(reg.lookup("5").unwrap().id(), BijectionId::B5);
        assert!(reg.lookup("zz").is_err());
    }

    #[test]
    fn domain_checks_are_eager() {
        let err = b2(&p("UUDD"), Mode::Checked).unwrap_err();
        assert_eq!(
            err,
            BijectionError::DomainViolation {
                bijection: BijectionId::B2,
                input: "UUDD".into(),
                reason: DomainReason::Contains { pattern: Pattern::UU, position: 0 }
            }
        );
        assert!(b5(&p("UDUD"), Mode::Explicit).is_err());
        assert!(matches!(
            b2_inverse(&p("")),
            Err(BijectionError::DomainViolation { reason: DomainReason::TooShort { min_len: 1 }, .. })
        ));
        assert!(b3_inverse(&p("UDF")).is_err());
        assert!(involution(&p("UUDD"), InvolutionForm::Segment).is_err());
    }
}
