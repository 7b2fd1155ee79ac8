//! Named building blocks for the connectivity-2 torus obstructions.
//!
//! A catalog is a list of terminal graphs with the critical classes they
//! are claimed to belong to. Families with a construction (the Kuratowski
//! classes, T1, T2, T5) are generated; the others are shipped as data and
//! every claim is re-derived by [`validate_catalog`].

mod format;
mod generate;
mod minor;
mod validate;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::criticality::Parameter;
use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, TerminalGraph};

pub use format::{parse_catalog, write_catalog, CATALOG_HEADER};
pub use generate::{
    build_c0_g, build_c0_gplus, builtin_kuratowski, generate_t1, generate_t2, generate_t5, terminal_placements,
};
pub use minor::{find_minor, has_minor};
pub use validate::{
    family_of, validate_catalog, verified_tags, Discrepancy, ValidationOptions, ValidationReport, T4_MINORS,
};

/// The catalog shipped with the crate.
pub const SHIPPED_CATALOG: &str = include_str!("../../data/torus-building-blocks.cat");

/// A class tag as written in catalog files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    C0g,
    C0gPlus,
    C0ga,
    C0gaPlus,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl Tag {
    pub const ALL: [Tag; 10] =
        [Tag::C0g, Tag::C0gPlus, Tag::C0ga, Tag::C0gaPlus, Tag::T1, Tag::T2, Tag::T3, Tag::T4, Tag::T5, Tag::T6];

    pub const FAMILIES: [Tag; 6] = [Tag::T1, Tag::T2, Tag::T3, Tag::T4, Tag::T5, Tag::T6];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::C0g => "C0g",
            Tag::C0gPlus => "C0g+",
            Tag::C0ga => "C0ga",
            Tag::C0gaPlus => "C0ga+",
            Tag::T1 => "T1",
            Tag::T2 => "T2",
            Tag::T3 => "T3",
            Tag::T4 => "T4",
            Tag::T5 => "T5",
            Tag::T6 => "T6",
        }
    }

    /// The parameter whose level-0 critical class the tag names.
    pub fn parameter(self) -> Option<Parameter> {
        match self {
            Tag::C0g => Some(Parameter::G),
            Tag::C0gPlus => Some(Parameter::GPlus),
            Tag::C0ga => Some(Parameter::GA),
            Tag::C0gaPlus => Some(Parameter::GAPlus),
            _ => None,
        }
    }

    pub fn for_parameter(p: Parameter) -> Tag {
        match p {
            Parameter::G => Tag::C0g,
            Parameter::GPlus => Tag::C0gPlus,
            Parameter::GA => Tag::C0ga,
            Parameter::GAPlus => Tag::C0gaPlus,
        }
    }

    pub fn is_family(self) -> bool {
        self.parameter().is_none()
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Tag::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| format!("unknown class tag {s:?}"))
    }
}

/// Where an entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// Read off a drawing of the graph.
    Transcribed,
    /// Produced by one of the generators in this module.
    Generated,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Transcribed => "figure-transcription",
            Source::Generated => "generated",
        }
    }
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "figure-transcription" => Ok(Source::Transcribed),
            "generated" => Ok(Source::Generated),
            _ => Err(format!("unknown source {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: TerminalGraph,
    pub classes: BTreeSet<Tag>,
    pub source: Source,
    /// Non-terminals `v` claimed to have `g(G - v) = 1`.
    pub marked: Vec<usize>,
    /// Written as an XY-labelled record rather than with explicit terminals.
    pub labelled: bool,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, graph: TerminalGraph, classes: impl IntoIterator<Item = Tag>, source: Source) -> Self {
        CatalogEntry {
            name: name.into(),
            graph,
            classes: classes.into_iter().collect(),
            source,
            marked: Vec::new(),
            labelled: false,
        }
    }

    pub fn code(&self) -> CanonicalCode {
        canonical_code(&self.graph)
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.classes.contains(&tag)
    }

    /// The T-family tag, if the entry claims one.
    pub fn family(&self) -> Option<Tag> {
        self.classes.iter().copied().find(|t| t.is_family())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub version: String,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Rejects duplicate names and isomorphic duplicates.
    pub fn new(entries: Vec<CatalogEntry>) -> Result<Self> {
        let mut names = HashSet::new();
        let mut codes = HashSet::new();
        for e in &entries {
            if !names.insert(e.name.as_str()) {
                return Err(Error::Catalog(format!("duplicate name {:?}", e.name)));
            }
            if !codes.insert(e.code()) {
                return Err(Error::Catalog(format!("{:?} is isomorphic to an earlier entry", e.name)));
            }
        }
        Ok(Catalog { version: "v1".into(), entries })
    }

    pub fn shipped() -> Catalog {
        parse_catalog(SHIPPED_CATALOG).expect("shipped catalog parses")
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        parse_catalog(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn tagged(&self, tag: Tag) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.entries.iter().filter(move |e| e.has(tag))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
