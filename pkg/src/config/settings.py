from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # 애플리케이션 환경
    APP_ENV: str = "local"
    LOG_LEVEL: str = "INFO"

    # 하이퍼파라미터 집합 기본 범위 (α: gain, β: bias)
    ALPHA_START: float = 1.15
    ALPHA_END: float = 1.35
    BETA_START: float = -0.1
    BETA_END: float = 0.4
    # 0.15 로 두면 범위 탐색 당시의 격자를 그대로 재현
    PARAM_STEP: float = 0.05
    PARAM_DECIMALS: int = 2

    # 재현성
    MASTER_SEED: int = 0

    # 배치 처리
    BATCH_SIZE: int = 16
    WORKERS: int = 4

    # 픽셀 도메인: "byte" (0~255) 또는 "unit" (0.0~1.0)
    PIXEL_DOMAIN: str = "byte"

    # 출력
    OUTPUT_FORMAT: str = "png"
    REPORT_FILENAME: str = "enhance_report.csv"

    # 벤치마크 (fixed / gamma 모드 값이 지정되지 않았을 때 사용)
    BENCH_REPEATS: int = 3
    BENCH_GAMMA: float = 0.5

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )


def get_settings() -> Settings:
    return Settings()
