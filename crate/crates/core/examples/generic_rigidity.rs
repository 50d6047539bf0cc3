//! Generic rigidity in the plane (pebble game, Jackson-Jordan) and the
//! randomized tests in space.

use pennyrig::corpus::fixture;
use pennyrig::generic::{generically_globally_rigid_2d, hendrickson_necessary, maxwell_deficit, pebble_game_2d};

fn main() -> pennyrig::Result<()> {
    for id in ["fig-barjoint-a", "fig-barjoint-b", "fig-barjoint-c", "fig-barjoint-d", "fig-sparse-2"] {
        let f = fixture(id).expect("fixture exists");
        let rigid = pebble_game_2d(&f.graph);
        let global = generically_globally_rigid_2d(&f.graph);
        println!(
            "{id:<16} pebble game {:?}, global {:?}, maxwell deficit {}",
            rigid.status,
            global.status,
            maxwell_deficit(&f.graph, 2)
        );
    }
    let octahedron = fixture("octahedron").expect("fixture exists");
    println!("octahedron satisfies the Hendrickson conditions in 3D: {}", hendrickson_necessary(&octahedron.graph, 3)?);
    Ok(())
}
