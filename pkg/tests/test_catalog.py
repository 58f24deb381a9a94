"""
Group specifications, builders, the standard catalog and group files
"""

import json

import pytest

from src.catalog import (
    GroupSpec,
    automorphism_from_generator_images,
    build,
    build_named,
    catalog_listing,
    catalog_names,
    find_spec,
    load_group,
    save_group,
    standard_catalog,
)
from src.catalog.builders import quaternion_product
from src.catalog.io import group_from_dict, group_to_dict
from src.catalog.standard import CATALOG_SPECS, catalog_specs, power_action
from src.core.exceptions import ConfigurationError, InvalidActionError, ParseError
from src.fusion import FusionClass, enumerate_class
from src.nilpotency import is_p_nilpotent
from src.perm import inverse, power, prime_divisors


class TestGroupSpec:

    def test_default_names(self):
        assert GroupSpec.cyclic(5).name == "C5"
        assert GroupSpec.dihedral(4).name == "D4"
        assert GroupSpec.elementary_abelian(2, 3).name == "C2^3"
        assert GroupSpec.direct_product(GroupSpec.cyclic(4), GroupSpec.symmetric(3)).name == "C4xS3"

    def test_predicted_orders(self):
        assert GroupSpec.dihedral(6).predicted_order() == 12
        assert GroupSpec.alternating(5).predicted_order() == 60
        assert GroupSpec.quaternion8_c3().predicted_order() == 24
        spec = GroupSpec.direct_product(GroupSpec.cyclic(2), GroupSpec.quaternion8())
        assert spec.predicted_order() == 16

    def test_describe(self):
        spec = GroupSpec.direct_product(GroupSpec.cyclic(2), GroupSpec.symmetric(3))
        assert spec.describe() == "direct_product(cyclic(2), symmetric(3))"


class TestBuilders:

    @pytest.mark.parametrize("name", [spec.name for spec in CATALOG_SPECS])
    def test_catalog_orders_match_predictions(self, name):
        spec = find_spec(name)
        G = build(spec)
        assert G.order == spec.predicted_order()
        assert G.name == name

    def test_small_dihedral_cases(self):
        assert build(GroupSpec.dihedral(1)).order == 2
        assert build(GroupSpec.dihedral(2)).order == 4
        assert build(GroupSpec.dihedral(2)).is_abelian()

    def test_quaternion_arithmetic(self):
        assert quaternion_product("i", "j") == "k"
        assert quaternion_product("j", "i") == "-k"
        assert quaternion_product("-i", "-i") == "-1"

    def test_quaternion_constructions_agree(self):
        compact = build_named("Q8:C3")
        regular = build_named("Q8:C3/regular")
        assert compact.degree == 8
        assert regular.degree == 24
        for G in (compact, regular):
            assert G.order == 24
            assert not is_p_nilpotent(G, 2).p_nilpotent
            assert is_p_nilpotent(G, 3).p_nilpotent
            assert len(enumerate_class(G, FusionClass.cyclic_p(2))) == 1

    def test_direct_product_is_abelian_iff_factors_are(self):
        assert build_named("C2^3").is_abelian()
        assert not build_named("C2xQ8").is_abelian()

    def test_automorphism_from_generator_images(self, c6):
        images = automorphism_from_generator_images(c6, [inverse(c6.generators[0])])
        assert sorted(images) == list(range(6))
        assert images[0] == 0

    def test_non_bijective_generator_image(self):
        C4 = build_named("C4")
        with pytest.raises(InvalidActionError):
            automorphism_from_generator_images(C4, [power(C4.generators[0], 2)])

    def test_wrong_number_of_images(self, c6):
        with pytest.raises(InvalidActionError):
            automorphism_from_generator_images(c6, [])

    def test_action_must_be_a_homomorphism(self):
        spec = GroupSpec.semidirect(GroupSpec.cyclic(7), GroupSpec.cyclic(2), power_action(2))
        with pytest.raises(InvalidActionError):
            build(spec)

    def test_semidirect_products(self):
        frobenius_21 = build_named("C7:C3")
        assert frobenius_21.order == 21
        assert not frobenius_21.is_abelian()
        dicyclic = build_named("C3:C4")
        assert dicyclic.order == 12
        assert len(enumerate_class(dicyclic, FusionClass.cyclic_p(2))) == 1


class TestStandardCatalog:

    def test_names_and_order(self):
        names = catalog_names(24)
        assert names[0] == "C1"
        assert {"S3", "S4", "A4", "Q8", "Q8:C3", "D4", "C4xS3"} <= set(names)
        assert "S5" not in names
        assert len(names) == len(set(names))

    def test_order_filter(self):
        assert all(G.order <= 12 for _, G in standard_catalog(12))
        assert [name for name, _ in standard_catalog(1)] == ["C1"]

    def test_catalog_is_large_enough(self):
        cells = sum(len(prime_divisors(spec.predicted_order())) for spec in catalog_specs(200))
        assert cells >= 40

    def test_limit_above_configuration(self):
        with pytest.raises(ConfigurationError):
            catalog_specs(10 ** 6)

    def test_build_named_unknown(self):
        with pytest.raises(KeyError):
            build_named("M11")

    def test_listing(self):
        listing = catalog_listing(6)
        assert listing[0] == {"name": "C1", "order": 1, "degree": 1}
        assert {"name": "S3", "order": 6, "degree": 3} in listing


class TestGroupFiles:

    def test_round_trip(self, tmp_path, q8_c3):
        path = tmp_path / "q8c3.json"
        save_group(q8_c3, path)
        loaded = load_group(path)
        assert loaded == q8_c3
        assert loaded.name == "Q8:C3"

    def test_to_dict(self, s3):
        data = group_to_dict(s3)
        assert data["degree"] == 3
        assert data["name"] == "S3"
        assert group_from_dict(data) == s3

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "degree": 3,\n  "generators": [[1, 0, 2]\n}\n')
        with pytest.raises(ParseError) as excinfo:
            load_group(path)
        assert excinfo.value.field == "<json>"
        assert excinfo.value.line is not None

    @pytest.mark.parametrize("data,field", [
        ([], "<root>"),
        ({"degree": 0, "generators": [[0]]}, "degree"),
        ({"degree": 3, "generators": []}, "generators"),
        ({"degree": 3, "generators": [[1, 0, 2], [0, 1]]}, "generators[1]"),
        ({"degree": 3, "generators": [[0, 0, 1]]}, "generators[0]"),
        ({"degree": 3, "generators": [[0, 1, "2"]]}, "generators[0]"),
        ({"name": 5, "degree": 3, "generators": [[1, 0, 2]]}, "name"),
    ])
    def test_invalid_documents(self, data, field):
        with pytest.raises(ParseError) as excinfo:
            group_from_dict(data)
        assert excinfo.value.field == field

    def test_json_document_shape(self, tmp_path, s3):
        path = tmp_path / "s3.json"
        save_group(s3, path)
        data = json.loads(path.read_text())
        assert set(data) == {"name", "degree", "generators"}

    def test_non_utf8_file(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"name": "\xff", "degree": 3, "generators": [[1, 0, 2]]}\n')
        with pytest.raises(ParseError) as excinfo:
            load_group(path)
        assert excinfo.value.field == "<json>"
