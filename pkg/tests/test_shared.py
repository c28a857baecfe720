import os
import json

import pytest

from oadsmine.shared import errors
from oadsmine.shared.filestorage import atomic_open, write_json, load_json_data
from oadsmine.shared.workerpool import bounded_map
from oadsmine.shared.stdscript import (
    StandardScript, env_overrides, load_json_file, merge_config, strip_unset, template_config, typed_value,
)


class TestConfigLayering:
    def test_template_has_all_sections(self):
        config = template_config()
        for section in ("CORPUS", "EXTRACTION", "SCOPE", "CLASSIFIER", "FEATURIZER",
                        "TRAINING", "GHP", "ANALYTICS", "RUN", "LOGGING"):
            assert section in config
        assert config['ANALYTICS']['top_n'] == 15
        assert config['ANALYTICS']['bin_width'] == 50

    def test_merge_is_per_key_and_leaves_base_alone(self):
        base = {"A": {"x": 1, "y": 2}, "B": {"z": 3}}
        merged = merge_config(base, {"A": {"y": 20}})
        assert merged == {"A": {"x": 1, "y": 20}, "B": {"z": 3}}
        assert base['A']['y'] == 2

    def test_env_values_are_parsed_as_json(self):
        config = {"RUN": {"workers": 4, "output_dir": "out"}}
        overrides = env_overrides(config, {
            "OADSMINE_RUN_WORKERS": "8",
            "OADSMINE_RUN_OUTPUT_DIR": "elsewhere",
            "UNRELATED": "1",
        })
        assert overrides == {"RUN": {"workers": 8, "output_dir": "elsewhere"}}

    def test_unknown_env_key_is_ignored(self):
        assert env_overrides({"RUN": {"workers": 4}}, {"OADSMINE_RUN_COLOR": "red"}) == {}

    def test_strip_unset_drops_none(self):
        assert strip_unset({"RUN": {"workers": None, "output_dir": "x"}}) == {"RUN": {"output_dir": "x"}}

    def test_precedence(self, tmp_path, clean_environment):
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"RUN": {"workers": 2, "output_dir": "from-file"},
                                           "ANALYTICS": {"top_n": 5}}))
        script = StandardScript(str(config_file),
                                overrides={"RUN": {"output_dir": "from-flag", "workers": None}},
                                environ={"OADSMINE_RUN_WORKERS": "3", "OADSMINE_ANALYTICS_TOP_N": "7"})
        assert script.config['RUN']['output_dir'] == "from-flag"
        assert script.config['RUN']['workers'] == 3
        assert script.config['ANALYTICS']['top_n'] == 7
        assert script.config['ANALYTICS']['bin_width'] == 50

    def test_bad_json_is_a_config_error(self, tmp_path):
        config_file = tmp_path / "broken.json"
        config_file.write_text("{ \"RUN\": ")
        with pytest.raises(errors.ConfigError, match="Please check for typos"):
            load_json_file(str(config_file))

    def test_missing_file_is_a_config_error(self, tmp_path):
        with pytest.raises(errors.ConfigError):
            load_json_file(str(tmp_path / "absent.json"))


class TestErrors:
    def test_exit_codes(self):
        assert errors.ConfigError("x").exit_code == 1
        assert errors.DataError("x").exit_code == 2
        assert errors.ManifestError("x", 3).exit_code == 2

    def test_line_numbers_in_messages(self):
        assert str(errors.ManifestError("bad month", 4)) == "line 4: bad month"
        assert str(errors.LabeledDataError("bad label", 2)) == "line 2: bad label"

    def test_uri_parse_error_is_a_value_error(self):
        assert issubclass(errors.UriParseError, ValueError)
        assert issubclass(errors.UriParseError, errors.DataError)


class TestAtomicOutput:
    def test_file_appears_complete(self, tmp_path):
        target = tmp_path / "sub" / "out.txt"
        with atomic_open(str(target), newline="") as out_file:
            out_file.write("a\nb\n")
            assert not target.exists()
        assert target.read_bytes() == b"a\nb\n"
        assert os.listdir(str(tmp_path / "sub")) == ["out.txt"]

    def test_failed_write_leaves_nothing(self, tmp_path):
        target = tmp_path / "out.txt"
        with pytest.raises(RuntimeError):
            with atomic_open(str(target)) as out_file:
                out_file.write("partial")
                raise RuntimeError("boom")
        assert os.listdir(str(tmp_path)) == []

    def test_json_is_sorted_and_stable(self, tmp_path):
        target = str(tmp_path / "data.json")
        write_json(target, {"b": 1, "a": [1, 2]})
        first = open(target, "rb").read()
        write_json(target, {"a": [1, 2], "b": 1})
        assert open(target, "rb").read() == first
        assert load_json_data(target) == {"a": [1, 2], "b": 1}

    def test_corrupt_json_is_a_data_error(self, tmp_path):
        target = tmp_path / "data.json"
        target.write_text("[1,")
        with pytest.raises(errors.DataError):
            load_json_data(str(target))


class TestTypedValues:
    @pytest.mark.parametrize("value, kind, expected", [
        (8, int, 8), ("8", int, 8), (0.25, float, 0.25), ("0.25", float, 0.25), (True, bool, True),
    ])
    def test_converts(self, value, kind, expected):
        assert typed_value({"RUN": {"key": value}}, "RUN", "key", kind) == expected

    @pytest.mark.parametrize("value, kind", [
        ("abc", int), (None, int), (True, int), ("yes", bool), (1, bool), ("fast", float), ([1], float),
    ])
    def test_rejects(self, value, kind):
        with pytest.raises(errors.ConfigError, match="RUN.key"):
            typed_value({"RUN": {"key": value}}, "RUN", "key", kind)


class TestBoundedMap:
    def test_keeps_input_order(self):
        assert list(bounded_map(lambda x: x * x, range(50), 3)) == [x * x for x in range(50)]

    def test_empty_input(self):
        assert list(bounded_map(str, [], 4)) == []

    def test_submits_only_a_window_ahead(self):
        submitted = []

        def items():
            for item in range(100):
                submitted.append(item)
                yield item
        results = bounded_map(lambda x: x, items(), workers=2, read_ahead=1)
        assert next(results) == 0
        assert len(submitted) == 3
        results.close()
