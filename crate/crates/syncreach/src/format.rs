//! Text formats for automata (`.aut`) and permutation groups (`.grp`).
//!
//! Automata:
//! ```text
//! # comment lines start with '#'
//! states 4
//! letter a 1 2 3 0
//! letter b 0 1 2 0
//! ```
//!
//! Groups, with generators in image notation (`gen`) or cycle notation
//! (`cyc`, fixed points omitted):
//! ```text
//! degree 5
//! gen g1 1 2 3 4 0
//! cyc g2 (0 2 4 1 3)
//! ```
//!
//! The serializers emit the canonical form: a `states`/`degree` line
//! followed by one image-notation line per letter or generator.

use thiserror::Error;

use crate::automaton::SemiAutomaton;
use crate::group::PermGroup;
use crate::transformation::Transformation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Significant lines (1-based numbering), with blank and comment lines
/// dropped.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .collect()
}

fn parse_header(
    lines: &[(usize, &str)],
    keyword: &str,
) -> Result<usize, ParseError> {
    let &(line, text) = match lines.first() {
        Some(first) => first,
        None => return err(1, format!("missing {} header", keyword)),
    };
    let mut tokens = text.split_whitespace();
    match tokens.next() {
        Some(k) if k == keyword => {}
        Some(other) => return err(line, format!("expected {:?}, found {:?}", keyword, other)),
        None => unreachable!("blank lines are filtered"),
    }
    let n = match tokens.next() {
        Some(value) => match value.parse::<usize>() {
            Ok(n) if n >= 1 => n,
            Ok(n) => return err(line, format!("{} must be at least 1, got {}", keyword, n)),
            Err(_) => return err(line, format!("bad {} count {:?}", keyword, value)),
        },
        None => return err(line, format!("{} needs a count", keyword)),
    };
    if let Some(extra) = tokens.next() {
        return err(line, format!("unexpected token {:?}", extra));
    }
    Ok(n)
}

fn parse_images(
    line: usize,
    n: usize,
    tokens: &[&str],
) -> Result<Transformation, ParseError> {
    if tokens.len() != n {
        return err(
            line,
            format!("expected {} images, got {}", n, tokens.len()),
        );
    }
    let mut images = Vec::with_capacity(n);
    for token in tokens {
        match token.parse::<usize>() {
            Ok(image) if image < n => images.push(image),
            Ok(image) => {
                return err(
                    line,
                    format!("image {} out of range for {} states", image, n),
                )
            }
            Err(_) => return err(line, format!("bad image {:?}", token)),
        }
    }
    Ok(Transformation::new(images).expect("range checked above"))
}

/// Cycle notation: `(a b c)(d e)`; whitespace inside is free.
fn parse_cycles(line: usize, n: usize, text: &str) -> Result<Transformation, ParseError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut number = String::new();
    let flush_number = |number: &mut String,
                        current: &mut Option<Vec<usize>>|
     -> Result<(), ParseError> {
        if number.is_empty() {
            return Ok(());
        }
        let value: usize = number
            .parse()
            .map_err(|_| ParseError {
                line,
                message: format!("bad point {:?}", number),
            })?;
        number.clear();
        match current {
            Some(cycle) => cycle.push(value),
            None => return err(line, "point outside parentheses"),
        }
        Ok(())
    };
    for c in text.chars() {
        match c {
            '(' => {
                if current.is_some() {
                    return err(line, "nested '(' in cycle notation");
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush_number(&mut number, &mut current)?;
                match current.take() {
                    Some(cycle) if cycle.is_empty() => {
                        return err(line, "empty cycle");
                    }
                    Some(cycle) => cycles.push(cycle),
                    None => return err(line, "unmatched ')'"),
                }
            }
            d if d.is_ascii_digit() => number.push(d),
            w if w.is_whitespace() => flush_number(&mut number, &mut current)?,
            other => return err(line, format!("unexpected character {:?}", other)),
        }
    }
    if current.is_some() {
        return err(line, "unmatched '('");
    }
    if !number.is_empty() {
        return err(line, "point outside parentheses");
    }
    Transformation::from_cycles(n, &cycles).map_err(|e| ParseError {
        line,
        message: e.to_string(),
    })
}

pub fn parse_automaton(text: &str) -> Result<SemiAutomaton, ParseError> {
    let lines = significant_lines(text);
    let n = parse_header(&lines, "states")?;
    let mut letters: Vec<(String, Transformation)> = Vec::new();
    for &(line, content) in &lines[1..] {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "letter" => {
                if tokens.len() < 2 {
                    return err(line, "letter needs a name");
                }
                let name = tokens[1].to_string();
                if letters.iter().any(|(existing, _)| existing == &name) {
                    return err(line, format!("duplicate letter name {:?}", name));
                }
                let action = parse_images(line, n, &tokens[2..])?;
                letters.push((name, action));
            }
            other => return err(line, format!("unexpected keyword {:?}", other)),
        }
    }
    if letters.is_empty() {
        let last = lines.last().map_or(1, |&(l, _)| l);
        return err(last, "an automaton needs at least one letter");
    }
    SemiAutomaton::new(n, letters).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn serialize_automaton(a: &SemiAutomaton) -> String {
    let mut out = format!("states {}\n", a.state_count());
    for (name, action) in a.letters() {
        out.push_str(&format!(
            "letter {} {}\n",
            name,
            action
                .images()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    out
}

pub fn parse_group(text: &str) -> Result<PermGroup, ParseError> {
    let lines = significant_lines(text);
    let n = parse_header(&lines, "degree")?;
    let mut generators: Vec<(String, Transformation)> = Vec::new();
    for &(line, content) in &lines[1..] {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let keyword = tokens[0];
        if keyword != "gen" && keyword != "cyc" {
            return err(line, format!("unexpected keyword {:?}", keyword));
        }
        if tokens.len() < 2 {
            return err(line, format!("{} needs a name", keyword));
        }
        let name = tokens[1].to_string();
        if generators.iter().any(|(existing, _)| existing == &name) {
            return err(line, format!("duplicate generator name {:?}", name));
        }
        let action = if keyword == "gen" {
            parse_images(line, n, &tokens[2..])?
        } else {
            let rest = content
                .splitn(3, char::is_whitespace)
                .nth(2)
                .unwrap_or("");
            parse_cycles(line, n, rest)?
        };
        if !action.is_permutation() {
            return err(line, format!("generator {:?} is not a permutation", name));
        }
        generators.push((name, action));
    }
    if generators.is_empty() {
        let last = lines.last().map_or(1, |&(l, _)| l);
        return err(last, "a group needs at least one generator");
    }
    PermGroup::new(n, generators, None).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn serialize_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for (name, action) in g.generators() {
        out.push_str(&format!(
            "gen {} {}\n",
            name,
            action
                .images()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cerny, corpus_automata, corpus_groups};

    #[test]
    fn automaton_roundtrip() {
        let a = cerny(4).unwrap();
        let text = serialize_automaton(&a);
        assert_eq!(
            text,
            "states 4\nletter a 1 2 3 0\nletter b 0 1 2 0\n"
        );
        let parsed = parse_automaton(&text).unwrap();
        assert_eq!(serialize_automaton(&parsed), text);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a comment\n\nstates 2\n\n# another\nletter a 1 0\n";
        let a = parse_automaton(text).unwrap();
        assert_eq!(a.state_count(), 2);
    }

    #[test]
    fn automaton_rejections() {
        // out-of-range image
        let e = parse_automaton("states 3\nletter a 5 0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));
        // wrong arity
        let e = parse_automaton("states 3\nletter a 0 1\n").unwrap_err();
        assert!(e.message.contains("expected 3 images"));
        // duplicate name
        let e = parse_automaton("states 2\nletter a 0 1\nletter a 1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));
        // missing header
        assert!(parse_automaton("letter a 0 1\n").is_err());
        assert!(parse_automaton("").is_err());
        // no letters
        assert!(parse_automaton("states 3\n").is_err());
    }

    #[test]
    fn group_roundtrip_and_cycles() {
        let text = "degree 5\ngen g1 1 2 3 4 0\n";
        let g = parse_group(text).unwrap();
        assert_eq!(serialize_group(&g), text);

        let cyc = parse_group("degree 5\ncyc r (0 1 2 3 4)\ncyc s (1 4)(2 3)\n").unwrap();
        let actions: Vec<_> = cyc.generator_actions().collect();
        assert_eq!(actions[0].images(), &[1, 2, 3, 4, 0]);
        assert_eq!(actions[1].images(), &[0, 4, 3, 2, 1]);
    }

    #[test]
    fn group_rejections() {
        // non-bijective generator
        let e = parse_group("degree 2\ngen a 0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("not a permutation"));
        // overlapping cycles
        assert!(parse_group("degree 3\ncyc a (0 1)(1 2)\n").is_err());
        // out-of-range point
        assert!(parse_group("degree 3\ncyc a (0 7)\n").is_err());
        // garbage in cycle notation
        assert!(parse_group("degree 3\ncyc a (0 1\n").is_err());
        assert!(parse_group("degree 3\ncyc a 0 1\n").is_err());
    }

    #[test]
    fn corpus_roundtrips() {
        for (name, a) in corpus_automata() {
            let text = serialize_automaton(&a);
            let again = serialize_automaton(&parse_automaton(&text).unwrap());
            assert_eq!(text, again, "{}", name);
        }
        for (name, g) in corpus_groups() {
            let text = serialize_group(&g);
            let again = serialize_group(&parse_group(&text).unwrap());
            assert_eq!(text, again, "{}", name);
        }
    }
}
