use std::fmt;

use crate::error::{Error, Result};
use crate::params::CycleParams;
use crate::Class;

/// A single step. The derived order `D < R < U` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    D,
    R,
    U,
}

impl Letter {
    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'D' => Some(Letter::D),
            'R' => Some(Letter::R),
            'U' => Some(Letter::U),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::D => 'D',
            Letter::R => 'R',
            Letter::U => 'U',
        }
    }
}

/// A word with `k` Rs, `k` Us and `n - k` Ds whose first letter is not `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    params: CycleParams,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(params: CycleParams, letters: Vec<Letter>) -> Result<Self> {
        let first = *letters.first().ok_or(Error::Empty)?;
        let count = |l| letters.iter().filter(|&&x| x == l).count();
        let (r, u, d) = (count(Letter::R), count(Letter::U), count(Letter::D));
        if r != params.k() || u != params.k() || d != params.d_count() {
            return Err(Error::BadCounts {
                r,
                u,
                d,
                k: params.k(),
                expected_d: params.d_count(),
            });
        }
        if first == Letter::D {
            return Err(Error::LeadingD);
        }
        Ok(Word { params, letters })
    }

    pub(crate) fn new_unchecked(params: CycleParams, letters: Vec<Letter>) -> Self {
        debug_assert!(Word::new(params, letters.clone()).is_ok());
        Word { params, letters }
    }

    pub fn params(&self) -> CycleParams {
        self.params
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| fmt::Write::write_char(f, l.as_char()))
    }
}

/// Parses an uppercase `R`/`U`/`D` string. No whitespace is accepted.
pub fn parse_word(text: &str, params: CycleParams) -> Result<Word> {
    if text.is_empty() {
        return Err(Error::Empty);
    }
    let letters = text
        .chars()
        .enumerate()
        .map(|(pos, ch)| Letter::from_char(ch).ok_or(Error::BadAlphabet { ch, pos }))
        .collect::<Result<Vec<_>>>()?;
    // A leading D is reported before the counts so the message points at the
    // structural problem rather than the multiplicities.
    if letters[0] == Letter::D {
        return Err(Error::LeadingD);
    }
    Word::new(params, letters)
}

/// Star iff the first letter that is not `U` is a `D`.
pub fn classify_word(w: &Word) -> Class {
    match w.letters.iter().find(|&&l| l != Letter::U) {
        Some(Letter::D) => Class::Star,
        _ => Class::Zero,
    }
}
