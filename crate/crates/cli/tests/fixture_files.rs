use std::path::PathBuf;

use cocart::fixtures;
use cocart_cli::{parse_bundle, serialize_bundle, Bundle};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

// Set COCART_REGENERATE=1 to rewrite the files after changing a fixture.
#[test]
fn shipped_bundles_match_the_builtin_fixtures() {
    let regenerate = std::env::var_os("COCART_REGENERATE").is_some();
    for fx in fixtures::all() {
        let path = dir().join(format!("{}.bundle", fx.name));
        let expected = serialize_bundle(&Bundle::from_fixture(&fx));
        if regenerate {
            std::fs::write(&path, &expected).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, expected, "{} is stale", path.display());
        assert_eq!(parse_bundle(&text).unwrap(), Bundle::from_fixture(&fx));
    }
}
