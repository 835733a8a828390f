//! Cycle notation.
//!
//! ```text
//! perm  := cycle*
//! cycle := "(" int ("," int)+ ")"
//! ```
//! Whitespace is ignored, the empty string is the identity and cycles must be
//! disjoint.

use crate::error::{Error, Result};

use super::perm::Permutation;

pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(Error::parse(
                pos,
                format!("expected `(`, found `{}`", char_at(text, pos)),
            ));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(if pos == bytes.len() {
                    Error::parse(pos, "unexpected end of input, expected a point")
                } else {
                    Error::parse(
                        pos,
                        format!("expected a point, found `{}`", char_at(text, pos)),
                    )
                });
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(start, "point too large"))?;
            if point == 0 || point > degree {
                return Err(Error::parse(
                    start,
                    format!("point {point} out of range 1..{degree}"),
                ));
            }
            if std::mem::replace(&mut used[point - 1], true) {
                return Err(Error::parse(start, format!("point {point} repeated")));
            }
            cycle.push(point - 1);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    if cycle.len() < 2 {
                        return Err(Error::parse(pos, "a cycle needs at least two points"));
                    }
                    pos += 1;
                    break;
                }
                Some(_) => {
                    return Err(Error::parse(
                        pos,
                        format!("expected `,` or `)`, found `{}`", char_at(text, pos)),
                    ))
                }
                None => return Err(Error::parse(pos, "unexpected end of input, expected `)`")),
            }
        }
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    Permutation::from_images0(images)
}

fn char_at(text: &str, pos: usize) -> char {
    text[pos..].chars().next().unwrap_or('?')
}

/// Inverse of [`parse_cycles`] (the identity prints as `""`).
pub fn print_cycles(p: &Permutation) -> String {
    p.to_cycle_string()
}
