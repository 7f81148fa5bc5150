import logging

from dotenv import find_dotenv, load_dotenv
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    loglevel: int = logging.INFO
    server_port: int = 8000
    environment: str = "develop"

    tool_version: str = "0.3.0"
    # Bumped whenever a field of the reproduce-paper JSON document changes
    report_schema_version: str = "1.0"

    # Engine limits
    # Gr(n - r, n) must satisfy k(n - k) <= max_grassmannian_dim for degree pushforwards
    max_grassmannian_dim: int = 12
    max_bso4_degree: int = 8
    schubert_cache_size: int = 4096
    todd_cache_size: int = 64

    # Reproduction settings
    reproduce_workers: int = 4

    @property
    def is_production(self) -> bool:
        return self.environment == "production"


load_dotenv(
    dotenv_path=find_dotenv(raise_error_if_not_found=False),
    verbose=False,
    override=False,
)
settings = Settings()
