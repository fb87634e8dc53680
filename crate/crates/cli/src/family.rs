use std::fmt;
use std::str::FromStr;

use burnkit::generators::{
    complete, cycle, necklace, path, random_connected, random_regular, random_tree, spider, star,
    Seed,
};
use burnkit::Graph;

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Spider,
    Necklace,
    RandomRegular,
    RandomConnected,
    RandomTree,
}

const NAMES: [(&str, Family, &[&str]); 9] = [
    ("path", Family::Path, &["n"]),
    ("cycle", Family::Cycle, &["n"]),
    ("complete", Family::Complete, &["n"]),
    ("star", Family::Star, &["leaves"]),
    ("spider", Family::Spider, &["legs", "leg_len"]),
    ("necklace", Family::Necklace, &["block_order", "blocks"]),
    ("random-regular", Family::RandomRegular, &["n", "k"]),
    (
        "random-connected",
        Family::RandomConnected,
        &["n", "extra_edges"],
    ),
    ("random-tree", Family::RandomTree, &["n"]),
];

impl Family {
    fn entry(self) -> &'static (&'static str, Family, &'static [&'static str]) {
        NAMES.iter().find(|e| e.1 == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        self.entry().0
    }

    pub fn param_names(self) -> &'static [&'static str] {
        self.entry().2
    }

    /// Builds the graph. `seed` is ignored by the deterministic families.
    pub fn build(self, params: &[usize], seed: Seed) -> CliResult<Graph> {
        let want = self.param_names();
        if params.len() != want.len() {
            return Err(CliError::Input(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.name(),
                want.len(),
                want.join(" "),
                params.len()
            )));
        }
        let p = params;
        let g = match self {
            Family::Path => path(p[0]),
            Family::Cycle => cycle(p[0]),
            Family::Complete => complete(p[0]),
            Family::Star => star(p[0]),
            Family::Spider => spider(p[0], p[1]),
            Family::Necklace => necklace(p[0], p[1]),
            Family::RandomRegular => random_regular(p[0], p[1], seed),
            Family::RandomConnected => random_connected(p[0], p[1], seed),
            Family::RandomTree => random_tree(p[0], seed),
        }?;
        Ok(g)
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        NAMES.iter().find(|e| e.0 == s).map(|e| e.1).ok_or_else(|| {
            let known: Vec<&str> = NAMES.iter().map(|e| e.0).collect();
            CliError::Input(format!(
                "unknown family `{s}` (known: {})",
                known.join(", ")
            ))
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for (name, fam, _) in NAMES {
            assert_eq!(name.parse::<Family>().unwrap(), fam);
            assert_eq!(fam.to_string(), name);
        }
        assert!("petersen".parse::<Family>().is_err());
    }

    #[test]
    fn arity_is_checked() {
        assert!(Family::Path.build(&[9, 1], 0).is_err());
        assert_eq!(
            Family::Necklace.build(&[4, 3], 0).unwrap().vertex_count(),
            12
        );
        assert!(Family::Path.build(&[0], 0).is_err());
    }
}
