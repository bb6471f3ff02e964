import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv
load_dotenv()

import click
import typer

from src.config.settings import get_settings
from src.commands.bench_command import run_bench_command
from src.commands.enhance_command import run_enhance
from src.commands.metrics_command import run_metrics
from src.commands.split_command import run_split
from src.commands.sweep_command import run_sweep
from src.enhancement.errors import EnhancementError

settings = get_settings()

logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger("medaug")

app = typer.Typer(
    help="Random affine brightness/contrast enhancement for medical image datasets.",
    no_args_is_help=True,
    add_completion=False,
    rich_markup_mode=None,
)

app.command("enhance")(run_enhance)
app.command("split")(run_split)
app.command("sweep")(run_sweep)
app.command("metrics")(run_metrics)
app.command("bench")(run_bench_command)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Returns:
        0 성공, 1 사용법 오류 (help 를 stderr 로 출력), 2 실행 중 실패
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    command = typer.main.get_command(app)

    try:
        result = command.main(args=argv, prog_name="medaug", standalone_mode=False)
    except click.UsageError as e:
        # 콜백 안에서 발생한 BadParameter 는 ctx 가 없으므로 최상위 help 출력
        ctx = e.ctx or click.Context(command, info_name="medaug")
        typer.echo(ctx.get_help(), err=True)
        typer.echo(f"Error: {e.format_message()}", err=True)
        return 1
    except click.Abort:
        typer.echo("Aborted.", err=True)
        return 1
    except EnhancementError as e:
        logger.error(f"Run failed: {e}")
        return 2

    logger.debug(f"[{settings.APP_ENV}] command finished with {result}")
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(cli_main())
