//! A mirrored poset read from the text format, checked, and reduced to its core.
//!
//! cargo run --example mirrored_posets

use tphi::models::build_tphi_power;
use tphi::poset::{core_reduction, discrete_type_classes, geometric_discrete_check, mirror_check, parse_poset_file, PosetFile};

const DIAMOND: &str = "\
elem bot
elem l
elem r
elem top
rel bot < l
rel bot < r
rel l < top
rel r < top
begin index
elem 0
elem 1
elem 2
rel 0 < 1
rel 1 < 2
end index
mirror bot -> 0
mirror l -> 1
mirror r -> 1
mirror top -> 2
";

fn main() {
    let PosetFile::Mirrored(mp) = parse_poset_file(DIAMOND).unwrap() else { unreachable!() };
    println!("diamond mirror check: {:?}", mirror_check(&mp));
    for line in geometric_discrete_check(&mp).lines() {
        println!("  {line}");
    }
    let (core, removed) = core_reduction(&mp.poset);
    println!("core has {} element(s); {} beat points removed", core.len(), removed.len());

    let power = build_tphi_power(2, 4, 1000).unwrap();
    let sizes: Vec<usize> = power.strata().iter().map(Vec::len).collect();
    println!("TΦ_4² − 0: strata sizes {sizes:?}, {} component(s)", discrete_type_classes(&power.poset).len());
}
