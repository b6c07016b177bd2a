from pathlib import Path
import os
from pydantic import BaseModel, Field
from dotenv import load_dotenv

REPO_ROOT = Path(__file__).resolve().parents[2]
# KERNELKIT_* values set by the repo-level file win over kernelkit/core/.env
ENV_FILES = (REPO_ROOT / ".env", Path(__file__).resolve().parent / ".env")
for env_file in ENV_FILES:
    load_dotenv(dotenv_path=env_file)


class Settings(BaseModel):
    solver_limit: int = Field(20, ge=0)
    log_level: str = "WARNING"
    workers: int = Field(1, ge=1)
    # 0 = computed from the instance size
    rule_budget: int = Field(0, ge=0)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def load_settings() -> Settings:
    return Settings(
        solver_limit=_env_int("KERNELKIT_SOLVER_LIMIT", 20),
        log_level=os.getenv("KERNELKIT_LOG_LEVEL", "WARNING").upper(),
        workers=max(1, _env_int("KERNELKIT_WORKERS", 1)),
        rule_budget=max(0, _env_int("KERNELKIT_RULE_BUDGET", 0)),
    )


settings = load_settings()
