use std::fs;

use triaxial_geodesy::bodies::load_catalog;
use triaxial_geodesy::{BodySource, Catalog, CatalogError};

#[test]
fn load_overlays_builtins() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.csv");
    fs::write(&path, "# user bodies\nVesta,286.3,278.6,223.2\nMoon,1738.1,1737.9,1736.0\n").unwrap();
    let c = load_catalog(&path).unwrap();
    assert_eq!(c.len(), 11);
    assert_eq!(c.get("Vesta").unwrap().source, BodySource::User);
    assert_eq!(c.get("Moon").unwrap().ellipsoid.ax(), 1738.1);
    assert_eq!(c.get("Earth").unwrap().source, BodySource::Builtin);
}

#[test]
fn serialized_catalog_reloads_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.csv");
    let builtin = Catalog::builtin();
    fs::write(&path, builtin.serialize()).unwrap();
    let reloaded = load_catalog(&path).unwrap();
    for (a, b) in builtin.bodies().iter().zip(reloaded.bodies()) {
        assert_eq!((&a.name, a.ellipsoid), (&b.name, b.ellipsoid));
    }
}

#[test]
fn missing_and_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(load_catalog(dir.path().join("nope.csv")), Err(CatalogError::Io { .. })));
    let path = dir.path().join("bad.csv");
    fs::write(&path, "Ok,3,2,1\nBad,3,2,one\n").unwrap();
    let err = load_catalog(&path).unwrap_err();
    assert!(matches!(err, CatalogError::Parse { line: 2, .. }), "{err}");
}
