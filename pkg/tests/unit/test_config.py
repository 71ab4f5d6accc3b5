import logging
import sys

from hingeset.config import BaseConfig, Render, Synthesis, config
from hingeset.logging_config import get_logger, setup_logging


class TestConfig:

    def test_defaults(self):
        assert config.app_name == "hingeset"
        assert config.SYNTHESIS.EPSILON_HALVINGS == 64
        assert config.SYNTHESIS.CANDIDATE_RANGE == 2
        assert config.RENDER.VIEWBOX == ("-4", "-4", "4", "4")

    def test_sections_are_models(self):
        fresh = BaseConfig()
        assert isinstance(fresh.SYNTHESIS, Synthesis)
        assert isinstance(fresh.RENDER, Render)

    def test_override_section(self):
        custom = BaseConfig(SYNTHESIS=Synthesis(EPSILON_HALVINGS=3, CANDIDATE_RANGE=1, WORKERS=2))
        assert custom.SYNTHESIS.EPSILON_HALVINGS == 3
        assert custom.SYNTHESIS.WORKERS == 2


class TestLogging:

    def test_setup_routes_to_stderr(self):
        setup_logging("DEBUG")
        root = logging.getLogger()
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 1
        assert root.handlers[0].stream is sys.stderr
        setup_logging("WARNING")

    def test_setup_with_file(self, tmp_path):
        log_file = tmp_path / "hingeset.log"
        setup_logging("INFO", str(log_file))
        get_logger("hingeset.test").info("written")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written" in log_file.read_text()
        setup_logging("WARNING")

    def test_get_logger_uses_module_name(self):
        assert get_logger("hingeset.core.hinge").name == "hingeset.core.hinge"
