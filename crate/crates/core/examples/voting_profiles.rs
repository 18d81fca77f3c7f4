//! Voters are coordinates: a realizer and a voting profile carry the same
//! pairwise margins.
//!
//!     cargo run --example voting_profiles

use majdim::profiles::margin_matrix;
use majdim::{majority_digraph, profile_to_realizer, realizer_to_profile, Profile, Realizer};

fn main() {
    // a > b > c, b > c > a, c > a > b
    let condorcet = Profile::new(3, vec![vec![3, 2, 1], vec![1, 3, 2], vec![2, 1, 3]]).unwrap();
    println!("profile {}", condorcet.to_json());
    println!("margins {:?}", margin_matrix(&condorcet));
    println!("majority arcs {:?}", majority_digraph(&condorcet).arcs());
    println!(
        "as a realizer {}",
        profile_to_realizer(&condorcet).to_json()
    );

    let f = Realizer::new(
        4,
        vec![vec![1, 4, 2, 2], vec![2, 1, 4, 1], vec![2, 2, 1, 3]],
    )
    .unwrap();
    let voters = realizer_to_profile(&f).unwrap();
    println!("realizer {} gives voters {}", f.to_json(), voters.to_json());
    println!("majority arcs {:?}", majority_digraph(&voters).arcs());
}
