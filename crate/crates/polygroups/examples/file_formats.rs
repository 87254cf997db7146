//! The three text formats: binary group tables, dense n-ary operation
//! tables and Hosszu-Gluskin algebra specs. Everything written is parsed
//! back bit for bit.

use polygroups::io::*;
use polygroups::Config;

const HG_SPEC: &str = "\
# 7-ary group on Z7 twisted by x -> 3x
arity 7
order 7
table
0 1 2 3 4 5 6
1 2 3 4 5 6 0
2 3 4 5 6 0 1
3 4 5 6 0 1 2
4 5 6 0 1 2 3
5 6 0 1 2 3 4
6 0 1 2 3 4 5
phi 0 3 6 2 5 1 4
b 0
";

fn main() {
    let cfg = Config::default();

    let hg = parse_hg(HG_SPEC).unwrap();
    let text = write_hg(&hg);
    print!("{text}");
    let again = parse_hg(&text).unwrap();
    assert_eq!(write_hg(&again), text);

    let group_text = write_group(hg.base());
    assert_eq!(write_group(&parse_group(&group_text).unwrap()), group_text);

    // dense table round trip via the derived operation
    let op = polygroups::polyadic::NaryOp::hg_backed(std::sync::Arc::new(hg));
    let nop_text = write_nop(&op.to_dense(&cfg).unwrap(), &cfg).unwrap();
    let parsed = parse_nop(&nop_text, &cfg).unwrap();
    assert_eq!(write_nop(&parsed, &cfg).unwrap(), nop_text);
    println!("round trips hold ({} table cells)", 7usize.pow(7));
}
