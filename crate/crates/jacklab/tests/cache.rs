use jacklab::app::{self, Format};
use jacklab::cache::{Cache, CacheKind, CacheStatus};
use jacklab_core::{CoeffKind, CoefficientEngine, Partition};

fn compute(n: u64) -> Result<Vec<u64>, anyhow::Error> {
    Ok((0..n).collect())
}

#[test]
fn round_trip_then_hit() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let (v, s) = cache.get_or_compute(CacheKind::CoeffTable, "k", || compute(5)).unwrap();
    assert_eq!((v, s), (vec![0, 1, 2, 3, 4], CacheStatus::Miss));
    let (v, s) = cache.get_or_compute(CacheKind::CoeffTable, "k", || compute(99)).unwrap();
    assert_eq!((v, s), (vec![0, 1, 2, 3, 4], CacheStatus::Hit));
}

#[test]
fn version_bump_invalidates() {
    let dir = tempfile::tempdir().unwrap();
    Cache::at(dir.path()).store(CacheKind::JackTheta, "k", &vec![1u64]).unwrap();
    let bumped = Cache::at(dir.path()).with_version(jacklab::cache::CACHE_VERSION + 1);
    let (v, s) = bumped.load::<Vec<u64>>(CacheKind::JackTheta, "k").unwrap();
    assert_eq!((v, s), (None, CacheStatus::Invalid));
    let (v, s) = bumped.get_or_compute(CacheKind::JackTheta, "k", || compute(2)).unwrap();
    assert_eq!((v, s), (vec![0, 1], CacheStatus::Invalid));
    assert_eq!(bumped.load::<Vec<u64>>(CacheKind::JackTheta, "k").unwrap().1, CacheStatus::Hit);
}

#[test]
fn corruption_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    cache.store(CacheKind::CoeffTable, "k", &vec![7u64, 8]).unwrap();
    let path = cache.path(CacheKind::CoeffTable, "k").unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen('8', "9", 1)).unwrap();
    assert_eq!(cache.load::<Vec<u64>>(CacheKind::CoeffTable, "k").unwrap(), (None, CacheStatus::Invalid));
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(cache.load::<Vec<u64>>(CacheKind::CoeffTable, "k").unwrap(), (None, CacheStatus::Invalid));
}

#[test]
fn disabled_cache_never_stores() {
    let cache = Cache::disabled();
    let (_, s) = cache.get_or_compute(CacheKind::CoeffTable, "k", || compute(1)).unwrap();
    assert_eq!(s, CacheStatus::Disabled);
    assert!(cache.path(CacheKind::CoeffTable, "k").is_none());
}

#[test]
fn cached_tables_equal_fresh_ones() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let engine = CoefficientEngine::new(5);
    for kind in [CoeffKind::A, CoeffKind::H, CoeffKind::ATilde, CoeffKind::HTilde] {
        for nu in jacklab_core::partitions_of(5) {
            let Ok(fresh) = engine.table(kind, 5, &nu) else {
                assert!(app::coeff_table(kind, 5, &nu, &cache).is_err());
                continue;
            };
            assert_eq!(app::coeff_table(kind, 5, &nu, &cache).unwrap(), fresh);
            assert_eq!(app::coeff_table(kind, 5, &nu, &cache).unwrap(), fresh);
        }
    }
    let on = app::oracle(5, Some(&Partition::row(5)), Format::Json, &cache).unwrap();
    let again = app::oracle(5, Some(&Partition::row(5)), Format::Json, &cache).unwrap();
    let off = app::oracle(5, Some(&Partition::row(5)), Format::Json, &Cache::disabled()).unwrap();
    assert_eq!(on, off);
    assert_eq!(again, off);
    assert_eq!(app::jack_table(4, &cache).unwrap(), app::jack_table(4, &Cache::disabled()).unwrap());
}

#[test]
fn outputs_are_deterministic() {
    let a = app::census_hypermaps(2, 3, Format::Csv, false).unwrap();
    let b = app::census_hypermaps(2, 3, Format::Csv, false).unwrap();
    assert_eq!(a, b);
    let nu: Partition = "3,1".parse().unwrap();
    assert_eq!(
        app::census_matchings(&nu, None, Format::Json, false).unwrap(),
        app::census_matchings(&nu, None, Format::Json, false).unwrap()
    );
}

#[test]
fn theta_table_reloads_identically() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::at(dir.path());
    let fresh = app::oracle(5, None, Format::Json, &cache).unwrap();
    assert_eq!(cache.load::<serde_json::Value>(CacheKind::JackTheta, "n5").unwrap().1, CacheStatus::Hit);
    assert_eq!(app::oracle(5, None, Format::Json, &cache).unwrap(), fresh);
}
