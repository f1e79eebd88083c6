//! Text encodings. Every parser accepts what the matching `Display` prints.
//!
//! * words and maps: `4232277`, or comma separated `1,10,3` when a letter
//!   has two digits, or letters `a..z` standing for `1..26`;
//! * permutations may also use cycle notation `(1352)(4)`, with spaces
//!   between points when some point is `>= 10`;
//! * set partitions: `{1,5|2|3,4}`;
//! * compositions and partitions: `(2,1,1)`.
//!
//! The empty object is written as the empty string or `∅`.

use crate::error::{Error, Result};

use super::cycles::{Cycle, CycleSet};
use super::maps::{Endofunction, ParkingFunction, Permutation};
use super::partitions::{Composition, IntegerPartition, SetPartition};

fn is_empty_token(s: &str) -> bool {
    s.is_empty() || s == "∅"
}

fn parse_num(tok: &str, ctx: &str) -> Result<usize> {
    tok.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad number `{tok}` in {ctx}")))
}

/// Parses a word of positive integers.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if is_empty_token(s) {
        return Ok(Vec::new());
    }
    let letters: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| parse_num(t, "word"))
            .collect::<Result<_>>()?
    } else if s.chars().all(|c| c.is_ascii_lowercase()) {
        s.chars().map(|c| (c as u8 - b'a') as usize + 1).collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        s.chars().map(|c| c as usize - '0' as usize).collect()
    } else {
        return Err(Error::Parse(format!("cannot read `{s}` as a word")));
    };
    if letters.contains(&0) {
        return Err(Error::Parse(format!("word `{s}` has a zero letter")));
    }
    Ok(letters)
}

/// Prints a word over `a..z`.
pub fn letters_to_alpha(w: &[usize]) -> Option<String> {
    w.iter()
        .map(|&x| {
            if (1..=26).contains(&x) {
                Some((b'a' + (x - 1) as u8) as char)
            } else {
                None
            }
        })
        .collect()
}

pub fn parse_endofunction(s: &str) -> Result<Endofunction> {
    Endofunction::new(parse_word(s)?)
}

pub fn parse_parking(s: &str) -> Result<ParkingFunction> {
    ParkingFunction::new(parse_word(s)?)
}

/// Parses `(1352)(4)`; points are digits unless separated by spaces.
pub fn parse_cycles(s: &str) -> Result<CycleSet> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .filter(|_| rest.starts_with('('))
            .ok_or_else(|| Error::Parse(format!("bad cycle notation `{s}`")))?;
        let body = &rest[1..body_end];
        let pts: Vec<usize> = if body.contains(' ') || body.contains(',') {
            body.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| parse_num(t, "cycle"))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad cycle `({body})`")))
                })
                .collect::<Result<_>>()?
        };
        cycles.push(Cycle::new(pts).map_err(|e| Error::Parse(e.to_string()))?);
        rest = rest[body_end + 1..].trim_start();
    }
    CycleSet::new(cycles).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a permutation as a word or in cycle notation.
pub fn parse_permutation(s: &str) -> Result<Permutation> {
    let s = s.trim();
    if s.starts_with('(') {
        parse_cycles(s)?.to_permutation()
    } else {
        Permutation::new(parse_word(s)?)
    }
}

fn strip(s: &str, open: char, close: char, what: &str) -> Result<String> {
    let s = s.trim();
    let inner = s
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("{what} must be written {open}...{close}: `{s}`")))?;
    Ok(inner.to_string())
}

fn parse_parts(s: &str, what: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if is_empty_token(s) {
        return Ok(Vec::new());
    }
    let inner = if s.starts_with('(') {
        strip(s, '(', ')', what)?
    } else {
        s.to_string()
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| parse_num(t, what)).collect()
}

pub fn parse_composition(s: &str) -> Result<Composition> {
    Composition::new(parse_parts(s, "composition")?)
}

pub fn parse_partition(s: &str) -> Result<IntegerPartition> {
    IntegerPartition::new(parse_parts(s, "partition")?)
}

/// Parses `{1,5|2|3,4}`.
pub fn parse_set_partition(s: &str) -> Result<SetPartition> {
    let s = s.trim();
    if is_empty_token(s) {
        return Ok(SetPartition::empty());
    }
    let inner = strip(s, '{', '}', "set partition")?;
    if inner.trim().is_empty() {
        return Ok(SetPartition::empty());
    }
    let blocks = inner
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|t| parse_num(t, "set partition"))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SetPartition::new(blocks).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["4232277", "1", "", "1,10,3,2,5,6,7,8,9,4"] {
            let w = parse_word(s).unwrap();
            assert_eq!(super::super::word::fmt_letters(&w), s);
        }
        let p = parse_permutation("(1352)(4)").unwrap();
        assert_eq!(p.to_string(), "31542");
        assert_eq!(parse_cycles(&p.cycles().to_string()).unwrap(), p.cycles());
        let big = parse_permutation("(1 2 6)(3 7)(4 9)(5 10 8)").unwrap();
        assert_eq!(big.cycles().to_string(), "(126)(37)(49)(5 10 8)");
        assert_eq!(parse_permutation(&big.to_string()).unwrap(), big);
        for s in ["{1,5|2|3,4}", "{1}", "{}"] {
            assert_eq!(parse_set_partition(s).unwrap().to_string(), s);
        }
        for s in ["(2,1,1)", "(3)", "()"] {
            assert_eq!(parse_composition(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_partition("(1,3,3,2)").unwrap().to_string(), "(3,3,2,1)");
    }

    #[test]
    fn letters_and_errors() {
        assert_eq!(parse_word("cab").unwrap(), vec![3, 1, 2]);
        assert_eq!(letters_to_alpha(&[3, 1, 2]).unwrap(), "cab");
        assert!(parse_word("1x").is_err());
        assert!(parse_permutation("112").is_err());
        assert!(parse_permutation("(12)(2)").is_err());
        assert!(parse_set_partition("{1,2|2}").is_err());
        assert!(parse_composition("(1,0)").is_err());
    }
}
