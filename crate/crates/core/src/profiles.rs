//! Voting profiles and their correspondence with realizers.
//!
//! A voter is a rank function over alternatives `0..m`: higher rank means
//! more preferred, equal ranks mean indifference. Voter `i` of the profile
//! induced by a realizer ranks each vertex by coordinate `i`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::Digraph;
use crate::realizer::Realizer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("alternative {alternative} out of range for {m} alternatives")]
    UnknownAlternative { alternative: usize, m: usize },
    #[error("voter {voter} ranks {found} alternatives, expected {expected}")]
    RaggedVoter {
        voter: usize,
        expected: usize,
        found: usize,
    },
    #[error("a zero-dimensional realizer has no voters")]
    ZeroDimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileJson", into = "ProfileJson")]
pub struct Profile {
    alternatives: usize,
    voters: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    alternatives: usize,
    voters: Vec<Vec<i64>>,
}

impl TryFrom<ProfileJson> for Profile {
    type Error = ProfileError;
    fn try_from(p: ProfileJson) -> Result<Self, Self::Error> {
        Profile::new(p.alternatives, p.voters)
    }
}

impl From<Profile> for ProfileJson {
    fn from(p: Profile) -> Self {
        ProfileJson {
            alternatives: p.alternatives,
            voters: p.voters,
        }
    }
}

impl Profile {
    pub fn new(alternatives: usize, voters: Vec<Vec<i64>>) -> Result<Self, ProfileError> {
        for (voter, ranks) in voters.iter().enumerate() {
            if ranks.len() != alternatives {
                return Err(ProfileError::RaggedVoter {
                    voter,
                    expected: alternatives,
                    found: ranks.len(),
                });
            }
        }
        Ok(Profile {
            alternatives,
            voters,
        })
    }

    pub fn alternatives(&self) -> usize {
        self.alternatives
    }

    pub fn voters(&self) -> &[Vec<i64>] {
        &self.voters
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profiles serialize")
    }

    pub fn from_json(s: &str) -> Result<Profile, crate::io::ParseError> {
        Ok(serde_json::from_str(s)?)
    }

    fn check(&self, a: usize) -> Result<(), ProfileError> {
        if a < self.alternatives {
            Ok(())
        } else {
            Err(ProfileError::UnknownAlternative {
                alternative: a,
                m: self.alternatives,
            })
        }
    }
}

/// Voters strictly preferring `a` to `b`, minus those preferring `b` to `a`.
pub fn majority_margin(r: &Profile, a: usize, b: usize) -> Result<i64, ProfileError> {
    r.check(a)?;
    r.check(b)?;
    Ok(r.voters.iter().map(|v| v[a].cmp(&v[b]) as i64).sum())
}

/// Full antisymmetric margin matrix.
pub fn margin_matrix(r: &Profile) -> Vec<Vec<i64>> {
    let m = r.alternatives;
    (0..m)
        .map(|a| {
            (0..m)
                .map(|b| majority_margin(r, a, b).expect("in range"))
                .collect()
        })
        .collect()
}

/// Arc `a -> b` exactly when the margin of `a` over `b` is positive.
pub fn majority_digraph(r: &Profile) -> Digraph {
    let m = r.alternatives;
    let arcs = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && majority_margin(r, a, b).expect("in range") > 0);
    Digraph::build(m, arcs).expect("margins are antisymmetric")
}

pub fn realizer_to_profile(f: &Realizer) -> Result<Profile, ProfileError> {
    if f.dim() == 0 {
        return Err(ProfileError::ZeroDimension);
    }
    let voters = (0..f.dim())
        .map(|i| f.vectors().iter().map(|x| x[i]).collect())
        .collect();
    Profile::new(f.len(), voters)
}

pub fn profile_to_realizer(r: &Profile) -> Realizer {
    let vectors = (0..r.alternatives)
        .map(|a| r.voters.iter().map(|v| v[a]).collect())
        .collect();
    Realizer::new(r.voters.len(), vectors).expect("one coordinate per voter")
}
