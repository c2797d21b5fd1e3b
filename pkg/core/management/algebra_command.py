# core/management/algebra_command.py

import argparse
import logging
from dataclasses import replace

from django.core.management.base import BaseCommand, CommandError

from core.config import OUTPUT_FORMATS, load_config
from core.exceptions import AlgebraError
from core.rendering import render
from exactlin.matrix import as_rational
from griess.engine import GriessEngine
from griess.verification import nilpotent_config, run_checks

logger = logging.getLogger(__name__)
audit = logging.getLogger("audit")


def rational_argument(text: str):
    """argparse type for "p/q" literals."""
    try:
        return as_rational(text)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def partition_word(parts) -> str:
    return "".join(f"L(-{n})" for n in parts) + "v"


def check_level(level: int, config):
    if level < 0 or level > config.max_level:
        raise CommandError(f"level must lie in [0, {config.max_level}], got {level}", returncode=2)


def configured_engine(config, assume: bool = False) -> GriessEngine:
    """The nilpotent-case engine with the run's weight cap and rewrite budget."""
    return GriessEngine(
        replace(
            nilpotent_config(assume),
            weight_cap=config.weight_cap,
            rewrite_budget=config.rewrite_budget,
        )
    )


class AlgebraCommand(BaseCommand):
    """
    Shared plumbing of the computation commands: --format and --config,
    rendering of the validated payload, and exit statuses (2 for usage and
    precondition errors, 1 when a verification does not reproduce).

    Subclasses set `kind` and implement `compute(config, **options)`, which
    returns the payload dict. A payload with "ok": False ends with status 1.
    """

    kind = None

    def add_arguments(self, parser):
        parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
        parser.add_argument("--config", default=None, help="KEY=value file overriding settings.ALGEBRA")
        self.add_algebra_arguments(parser)

    def add_algebra_arguments(self, parser):
        pass

    def compute(self, config, **options) -> dict:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = load_config(options.pop("config"))
            payload = self.compute(config, **options)
        except AlgebraError as exc:
            logger.error(f"{self.kind}: {exc}")
            raise CommandError(str(exc), returncode=exc.exit_status) from exc

        self.stdout.write(render(self.kind, payload, options["format"] or config.output_format), ending="")
        if payload.get("ok") is False:
            raise CommandError(f"{self.kind}: verification failed", returncode=1)

    def usage_error(self, message: str):
        raise CommandError(message, returncode=2)


class VerificationCommand(AlgebraCommand):
    """
    Replays a selection of the nilpotent-case checks. Subclasses add the option
    picking the steps and implement `selected_steps(options)`.
    """

    kind = "verify"

    def add_algebra_arguments(self, parser):
        self.add_step_argument(parser)
        parser.add_argument(
            "--assume",
            action="store_true",
            help="assert u_1 x, u_0 x, (x, x) and (u, u) instead of deriving them",
        )

    def add_step_argument(self, parser):
        raise NotImplementedError

    def selected_steps(self, options) -> tuple[str, ...]:
        raise NotImplementedError

    def compute(self, config, **options):
        engine = configured_engine(config, options["assume"])
        results = []
        for step in self.selected_steps(options):
            checks = run_checks(step, engine)
            results.append(
                {
                    "step": step,
                    "checks": [
                        {"name": c.name, "value": c.value, "expected": c.expected, "ok": c.ok}
                        for c in checks
                    ],
                    "ok": all(c.ok for c in checks),
                }
            )
        ok = all(r["ok"] for r in results)
        audit.info(f"{self.kind} {','.join(r['step'] for r in results)}: {'OK' if ok else 'FAILED'}")
        return {"steps": results, "ok": ok}
