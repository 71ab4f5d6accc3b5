from os import environ
from typing import Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class Info(BaseModel):
    """Information about the package"""
    name: str = Field("hingeset", description="Package name")
    description: str = Field(
        "Positivity sets of planar hinge functions: decide, construct, verify",
        description="Package description",
    )
    version: str = Field("0.1.0", description="Package version")


class Logging(BaseModel):
    """Logging configuration"""
    LEVEL: str = Field(environ.get("HINGESET_LOG_LEVEL", "WARNING"), description="Root log level")
    FILE: Optional[str] = Field(environ.get("HINGESET_LOG_FILE") or None, description="Optional log file path")


class Synthesis(BaseModel):
    """Constructive algorithm settings"""
    EPSILON_HALVINGS: int = Field(
        int(environ.get("HINGESET_EPSILON_HALVINGS", "64")),
        description="Maximum halvings of epsilon in the boundary-complement search",
    )
    CANDIDATE_RANGE: int = Field(
        int(environ.get("HINGESET_CANDIDATE_RANGE", "2")),
        description="Integer range for combinations of nullspace candidates",
    )
    WORKERS: int = Field(
        int(environ.get("HINGESET_WORKERS", "1")),
        description="Thread pool size for the local-condition scan",
    )


class Render(BaseModel):
    """SVG rendering defaults"""
    VIEWBOX: Tuple[str, str, str, str] = Field(("-4", "-4", "4", "4"), description="Default viewbox xmin,ymin,xmax,ymax")
    WIDTH: int = Field(480, description="Image width in pixels")
    HEIGHT: int = Field(480, description="Image height in pixels")
    FILL: str = Field("#9ecae1", description="Fill colour of the positivity set")
    VALLEY_STROKE: str = Field("#2ca02c", description="Stroke colour of valleys")
    MOUNTAIN_STROKE: str = Field("#8c564b", description="Stroke colour of mountains")
    BOUNDARY_STROKE: str = Field("#08306b", description="Stroke colour of the positivity boundary")
    SIGNIFICANT_DIGITS: int = Field(12, description="Significant digits of emitted coordinates")


class BaseConfig(BaseSettings):
    """
    Defines the package's configuration settings.
    Utilizes pydantic-settings to automatically read from environment variables
    or a .env file.
    """

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="allow"
    )

    app_name: str = "hingeset"
    INFO: Info = Info()
    LOGGING: Logging = Logging()
    SYNTHESIS: Synthesis = Synthesis()
    RENDER: Render = Render()


# Create a global config instance
config = BaseConfig()
