// Writes the bundled fixture corpus: algebras, their self-action triples,
// the naive triple on Z2, and the A3 ideal of S3 under conjugation.
//
// Run with `cargo run --example export_fixtures -- [DIR]`.

use std::error::Error;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use gwa::actions::{naive_self_action, self_action};
use gwa::algebra::{conjugation_gwa, identity_action_gwa};
use gwa::enumeration::enumerate_ideals;
use gwa::format::{write_algebra, write_json, ActionFile, SubsetFile};
use gwa::{FiniteGwa, GroupTable};

fn fixtures() -> Result<Vec<(&'static str, FiniteGwa)>, Box<dyn Error>> {
    let s3 = GroupTable::symmetric(3);
    Ok(vec![
        ("trivial", identity_action_gwa(&GroupTable::trivial())?),
        ("Z2", identity_action_gwa(&GroupTable::cyclic(2))?),
        ("Z3", identity_action_gwa(&GroupTable::cyclic(3))?),
        ("V4", identity_action_gwa(&GroupTable::klein_four())?),
        ("S3", identity_action_gwa(&s3)?),
        ("S3-conj", conjugation_gwa(&s3)?),
    ])
}

fn run(dir: &Path) -> Result<Vec<PathBuf>, Box<dyn Error>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut put = |name: String| {
        let p = dir.join(name);
        written.push(p.clone());
        p
    };
    for (stem, g) in fixtures()? {
        let g = Arc::new(g);
        write_algebra(&put(format!("{stem}.json")), &g)?;
        write_json(
            &put(format!("{stem}.self.json")),
            &ActionFile::from_triple(&self_action(&g)?),
        )?;
        if stem == "Z2" {
            write_json(
                &put("Z2.naive.json".into()),
                &ActionFile::from_triple(&naive_self_action(&g)?),
            )?;
        }
        if stem == "S3-conj" {
            let a3 = enumerate_ideals(&g)
                .into_iter()
                .find(|s| s.size() == 3)
                .ok_or("no ideal of size 3")?;
            write_json(
                &put("S3-conj.A3.json".into()),
                &SubsetFile::from_subset(&a3),
            )?;
        }
    }
    // 1^1 = 0 breaks the first action axiom.
    let z2 = GroupTable::cyclic(2);
    let broken = FiniteGwa::from_group(z2, vec![0, 0, 1, 0])?.renamed("Z2-broken");
    write_algebra(&put("Z2-broken.json".into()), &broken)?;
    Ok(written)
}

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data"));
    for p in run(&dir)? {
        println!("{}", p.display());
    }
    Ok(())
}
