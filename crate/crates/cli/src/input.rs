//! Input files: descriptors, root sets and stored bipartitions.

use std::collections::HashSet;
use std::fs;

use serde::Deserialize;
use serde_json::Value;
use u3::biclosed::{root_from_array, Bipartition, RootSet};
use u3::descriptor::BiclosedDescriptor;
use u3::{Error, Root};

/// `{"depth": D, "red": [[x,y,z], ...]}`: every listed root is red, every
/// other root of depth at most `D` is blue.
#[derive(Deserialize)]
struct BipartitionFile {
    depth: u32,
    red: Vec<[i64; 3]>,
}

pub enum Input {
    Descriptor(BiclosedDescriptor),
    Roots(RootSet),
    Coloring(Bipartition),
}

fn parse_err(path: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {e}"))
}

pub fn read(path: &str) -> Result<Input, Error> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(path, e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| parse_err(path, e))?;
    if v.get("kind").is_some() {
        let d: BiclosedDescriptor = serde_json::from_value(v).map_err(|e| parse_err(path, e))?;
        return Ok(Input::Descriptor(d.canonical()?));
    }
    if v.get("red").is_some() {
        let f: BipartitionFile = serde_json::from_value(v).map_err(|e| parse_err(path, e))?;
        let red: HashSet<Root> = f.red.into_iter().map(root_from_array).collect::<Result<_, _>>()?;
        if let Some(r) = red.iter().find(|r| r.depth > f.depth) {
            return Err(parse_err(path, format!("root {} is deeper than {}", r.vec.bracket(), f.depth)));
        }
        return Ok(Input::Coloring(Bipartition::from_predicate(f.depth, |r| red.contains(r))));
    }
    if v.get("roots").is_some() {
        let s: RootSet = serde_json::from_value(v).map_err(|e| parse_err(path, e))?;
        return Ok(Input::Roots(s));
    }
    Err(parse_err(path, "expected a descriptor, a root set or a bipartition"))
}
