use super::{PathError, Step};

/// First-step / first-return decomposition of a Motzkin word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization<'a> {
    Empty,
    /// `F · rest`
    Flat {
        rest: &'a [Step],
    },
    /// `U · inside · D · rest`, the `D` being the first return to ground level.
    Arch {
        inside: &'a [Step],
        rest: &'a [Step],
    },
}

/// Splits a Motzkin word at its first step and, for a leading `U`, at the
/// first return to height 0.
///
/// `steps` must be a Motzkin word.
pub fn first_return_split(steps: &[Step]) -> Factorization<'_> {
    match steps.first() {
        None => Factorization::Empty,
        Some(Step::F) => Factorization::Flat { rest: &steps[1..] },
        Some(Step::U) => {
            let mut height = 0i64;
            for (i, s) in steps.iter().enumerate() {
                height += s.delta();
                if height == 0 {
                    return Factorization::Arch { inside: &steps[1..i], rest: &steps[i + 1..] };
                }
            }
            panic!("word never returns to ground level");
        }
        Some(Step::D) => panic!("word starts with a downstep"),
    }
}

impl Factorization<'_> {
    pub fn reassemble(&self) -> Vec<Step> {
        match *self {
            Factorization::Empty => Vec::new(),
            Factorization::Flat { rest } => std::iter::once(Step::F).chain(rest.iter().copied()).collect(),
            Factorization::Arch { inside, rest } => std::iter::once(Step::U)
                .chain(inside.iter().copied())
                .chain(std::iter::once(Step::D))
                .chain(rest.iter().copied())
                .collect(),
        }
    }
}

/// `F^k`, or `F^a · s · F^b` with `s` strict (starts `U`, ends `D`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictFactorization<'a> {
    AllFlat(usize),
    Framed { a: usize, s: &'a [Step], b: usize },
}

impl StrictFactorization<'_> {
    pub fn reassemble(&self) -> Vec<Step> {
        match *self {
            StrictFactorization::AllFlat(k) => vec![Step::F; k],
            StrictFactorization::Framed { a, s, b } => {
                let mut out = vec![Step::F; a];
                out.extend_from_slice(s);
                out.extend(std::iter::repeat_n(Step::F, b));
                out
            }
        }
    }
}

/// Factors a balanced segment as `F^a · s · F^b` where `s` runs from the first
/// non-flat step to the last one.
pub fn strict_factor(segment: &[Step], require_leading_flat: bool) -> Result<StrictFactorization<'_>, PathError> {
    let Some(first) = segment.iter().position(|&s| s != Step::F) else {
        return Ok(StrictFactorization::AllFlat(segment.len()));
    };
    let last = segment.iter().rposition(|&s| s != Step::F).expect("has a non-flat step");
    if require_leading_flat && first == 0 {
        return Err(PathError::MissingLeadingFlat);
    }
    let s = &segment[first..=last];
    debug_assert!(s.first() == Some(&Step::U) && s.last() == Some(&Step::D));
    Ok(StrictFactorization::Framed { a: first, s, b: segment.len() - 1 - last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::MotzkinPath;

    fn w(s: &str) -> Vec<Step> {
        s.chars().map(|c| Step::from_symbol(c).unwrap()).collect()
    }

    #[test]
    fn first_return_examples() {
        let p = w("FUD");
        assert_eq!(first_return_split(&p), Factorization::Flat { rest: &w("UD") });
        let p = w("UFDUD");
        assert_eq!(first_return_split(&p), Factorization::Arch { inside: &w("F"), rest: &w("UD") });
        let p = w("UUDDUD");
        assert_eq!(first_return_split(&p), Factorization::Arch { inside: &w("UD"), rest: &w("UD") });
        assert_eq!(first_return_split(&[]), Factorization::Empty);
    }

    #[test]
    fn strict_factor_examples() {
        assert_eq!(strict_factor(&w("FFF"), false), Ok(StrictFactorization::AllFlat(3)));
        assert_eq!(strict_factor(&[], true), Ok(StrictFactorization::AllFlat(0)));
        let seg = w("FUDF");
        assert_eq!(strict_factor(&seg, true), Ok(StrictFactorization::Framed { a: 1, s: &w("UD"), b: 1 }));
        let seg = w("FFUDFUD");
        assert_eq!(strict_factor(&seg, false), Ok(StrictFactorization::Framed { a: 2, s: &w("UDFUD"), b: 0 }));
        assert_eq!(strict_factor(&w("UDF"), true), Err(PathError::MissingLeadingFlat));
    }

    #[test]
    fn reassembly() {
        let p: MotzkinPath = "UFUDDFUD".parse().unwrap();
        let f = p.first_return_split();
        assert_eq!(f.reassemble(), p.steps());
        if let Factorization::Arch { inside, .. } = f {
            let sf = strict_factor(inside, true).unwrap();
            assert_eq!(sf.reassemble(), inside);
        } else {
            panic!("expected an arch");
        }
    }
}
