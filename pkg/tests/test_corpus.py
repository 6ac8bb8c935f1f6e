from qcalc.corpus import CorpusSpec, generate
from qcalc.qcat import validate_category
from qcalc.quantaloid import validate_quantaloid


def test_determinism():
    a = generate(CorpusSpec(seed=7, count=12))
    b = generate(CorpusSpec(seed=7, count=12))
    assert len(a) == len(b) == 12
    for c1, c2 in zip(a, b):
        assert c1.objects == c2.objects
        assert c1.hom == c2.hom
        assert c1.base.comp_table == c2.base.comp_table


def test_different_seeds_differ():
    a = generate(CorpusSpec(seed=1, count=20))
    b = generate(CorpusSpec(seed=2, count=20))
    assert any(c1.hom != c2.hom or c1.objects != c2.objects for c1, c2 in zip(a, b))


def test_all_generated_are_valid():
    for cat in generate(CorpusSpec(seed=11, count=30)):
        assert validate_quantaloid(cat.base, join_check="pairs").ok
        assert validate_category(cat).ok
        assert 1 <= len(cat.obj_names) <= 3
        for L in cat.base.hom.values():
            assert len(L.elements) <= 6


def test_families():
    chains = generate(CorpusSpec(seed=3, count=6, family="chains"))
    assert all(len(c.base.objects) == 1 for c in chains)
    frames = generate(CorpusSpec(seed=3, count=6, family="frames"))
    assert all(validate_quantaloid(c.base, join_check="pairs").ok for c in frames)
    tables = generate(CorpusSpec(seed=3, count=10, family="random-tables"))
    assert all(validate_quantaloid(c.base, join_check="pairs").ok for c in tables)
    # the random-table family also produces two-object quantaloids
    mixed = generate(CorpusSpec(seed=5, count=40))
    assert any(len(c.base.objects) == 2 for c in mixed)


def test_max_objects_respected():
    for cat in generate(CorpusSpec(seed=9, count=15, max_objects=2)):
        assert len(cat.obj_names) <= 2
