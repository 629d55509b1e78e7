#!/usr/bin/env python3
"""
Cayley Runner - Kommandozeile für Zählungen, Reihen, Identitätschecks,
Äquivalenzen, Bijektionen und Vermutungen
"""
import os
import sys
import json
import argparse
import logging
import logging.handlers
import pathlib
from typing import Any, Dict, List, Optional, Sequence, Tuple

import psutil

# Eigene Module
import bijections
import catalog
import enumeration
import equiv
from core import CayleyError, parse_pattern, pattern_name
from parse_species_expr import ParseError, SpeciesExpressionParser
from series import SeriesError

FORMATS = ("json", "tsv", "bfile", "text")
LIBRARY_LOGGERS = ('CayleyEnumeration', 'CayleySeries', 'CayleyCatalog', 'CayleyEquiv', 'CayleyBijections')
WORKERS_ENV = "CAYLEY_WORKERS"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class ConfigError(ValueError):
    """Ungültige Konfiguration oder ungültige Schranken."""


class CrossCheckError(RuntimeError):
    """Formel und Enumeration liefern verschiedene Werte."""


class CayleyRunner:
    """Hauptklasse: lädt Konfiguration, richtet Logging ein und führt Kommandos aus."""

    def __init__(self, config_file: str = "cayley_config.json", overrides: Optional[Dict[str, Any]] = None):
        """
        Initialisiert den Runner mit Konfiguration.

        Args:
            config_file (str): Pfad zur JSON-Konfiguration (wird angelegt, falls sie fehlt)
            overrides (dict): Werte aus der Kommandozeile, die die Datei übersteuern
        """
        self.config_file = config_file
        self.config = self._load_config()
        overrides = dict(overrides or {})
        workers_flag = overrides.pop("workers", None)
        for key, value in overrides.items():
            if value is not None:
                self.config[key] = value
        self._validate_config()

        # Logging konfigurieren
        self._setup_logging()

        self.workers = self._resolve_workers(workers_flag)
        enumeration.configure(workers=self.workers, parallel_min_length=self.config['parallel_min_length'])
        self.output_path: Optional[pathlib.Path] = None

        self.logger.debug(f"🔧 Cayley Runner initialisiert (Worker: {self.workers})")

    def _load_config(self) -> Dict[str, Any]:
        """Lädt die Konfiguration aus der JSON-Datei."""
        # Standard-Konfiguration
        default_config = {
            "log_level": "INFO",
            "logging": {
                "main_log_file": "cayley_runner.log",
                "error_log_file": "cayley_errors.log",
                "max_log_size_mb": 10,
                "backup_count": 5
            },
            "workers": None,
            "parallel_min_length": 8,
            "bounds": {
                "enum_n": 8,
                "series_n": 12,
                "max_k": 6,
                "equiv_n": 8,
                "equiv_k": 6,
                "witness_n": 9,
                "witness_k": 5
            },
            "output_format": "text",
            "cross_check_max_n": 7
        }

        config_path = pathlib.Path(self.config_file)
        try:
            if config_path.exists():
                with open(config_path, 'r', encoding='utf-8') as f:
                    config = json.load(f)
                # Merge mit Default-Config, verschachtelte Abschnitte einzeln
                for section in ("logging", "bounds"):
                    default_config[section].update(config.pop(section, {}) or {})
                default_config.update(config)
            else:
                # Speichere Default-Config
                with open(config_path, 'w', encoding='utf-8') as f:
                    json.dump(default_config, f, indent=4, ensure_ascii=False)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Konfiguration {config_path} ist kein gültiges JSON: {e}") from e
        except OSError as e:
            print(f"Fehler beim Laden der Konfiguration: {e}", file=sys.stderr)

        return default_config

    def _validate_config(self):
        """Prüft Pflichtfelder, Schranken und Ausgabeformat."""
        required = ["log_level", "logging", "bounds", "output_format", "parallel_min_length", "cross_check_max_n"]
        missing = [key for key in required if key not in self.config]
        if missing:
            raise ConfigError(f"Fehlende Konfigurationsschlüssel: {', '.join(missing)}")
        if self.config['output_format'] not in FORMATS:
            raise ConfigError(f"Unbekanntes Ausgabeformat: {self.config['output_format']} (erlaubt: {', '.join(FORMATS)})")
        if not isinstance(getattr(logging, str(self.config['log_level']).upper(), None), int):
            raise ConfigError(f"Unbekanntes Log-Level: {self.config['log_level']}")
        for name, value in self.config['bounds'].items():
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"Schranke bounds.{name} muss eine positive ganze Zahl sein: {value!r}")
        for key in ("parallel_min_length", "cross_check_max_n"):
            value = self.config[key]
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"{key} muss eine nichtnegative ganze Zahl sein: {value!r}")
        workers = self.config.get('workers')
        if workers is not None and (not isinstance(workers, int) or workers < 1):
            raise ConfigError(f"workers muss null oder eine positive ganze Zahl sein: {workers!r}")

    def _setup_logging(self):
        """Konfiguriert das Logging-System."""
        log_level = getattr(logging, str(self.config.get('log_level', 'INFO')).upper())
        logging_config = self.config.get('logging', {})
        max_bytes = int(logging_config.get('max_log_size_mb', 10)) * 1024 * 1024
        backup_count = int(logging_config.get('backup_count', 5))

        # Formatter
        detailed_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
        )
        console_formatter = logging.Formatter('%(levelname)s - %(message)s')

        # Console Handler (stderr: stdout gehört den Ergebnissen)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(console_formatter)
        console_handler.setLevel(log_level)

        # File Handler
        main_log_file = logging_config.get('main_log_file', 'cayley_runner.log')
        file_handler = logging.handlers.RotatingFileHandler(
            main_log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(detailed_formatter)
        file_handler.setLevel(log_level)

        # Error Handler
        error_log_file = logging_config.get('error_log_file', 'cayley_errors.log')
        error_handler = logging.handlers.RotatingFileHandler(
            error_log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
        error_handler.setFormatter(detailed_formatter)
        error_handler.setLevel(logging.ERROR)

        # Logger konfigurieren (Runner und Bibliotheksmodule)
        self.logger = logging.getLogger('CayleyRunner')
        for name in ('CayleyRunner',) + LIBRARY_LOGGERS:
            logger = logging.getLogger(name)
            for handler in list(logger.handlers):
                logger.removeHandler(handler)
                handler.close()
            logger.setLevel(log_level)
            logger.addHandler(console_handler)
            logger.addHandler(file_handler)
            logger.addHandler(error_handler)

    def _resolve_workers(self, workers_flag: Optional[int] = None) -> int:
        """Worker-Anzahl: Kommandozeile, Umgebungsvariable, Konfiguration, Anzahl der CPUs."""
        if workers_flag is not None:
            if workers_flag < 1:
                raise ConfigError(f"--workers muss positiv sein: {workers_flag}")
            return workers_flag
        env_value = os.environ.get(WORKERS_ENV)
        if env_value:
            try:
                workers = int(env_value)
            except ValueError:
                raise ConfigError(f"{WORKERS_ENV} muss eine ganze Zahl sein: {env_value!r}")
            if workers < 1:
                raise ConfigError(f"{WORKERS_ENV} muss positiv sein: {workers}")
            return workers
        if self.config.get('workers'):
            return self.config['workers']
        return psutil.cpu_count(logical=True) or 1

    # ------------------------------------------------------------------
    # Ausgabe
    # ------------------------------------------------------------------

    @property
    def output_format(self) -> str:
        return self.config['output_format']

    def bound(self, name: str, value: Optional[int] = None) -> int:
        if value is None:
            return self.config['bounds'][name]
        if value < 0:
            raise ConfigError(f"Schranke muss nichtnegativ sein: {value}")
        return value

    def _emit(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.output_path is not None:
            with open(self.output_path, 'a', encoding='utf-8') as f:
                f.write(text)
        else:
            sys.stdout.write(text)

    def _emit_sequence(self, values: Sequence[int], meta: Dict[str, Any], extra_columns: Optional[List[str]] = None):
        fmt = self.output_format
        if fmt == "text":
            self._emit(" ".join(str(v) for v in values))
        elif fmt == "bfile":
            self._emit("".join(f"{n} {v}\n" for n, v in enumerate(values)))
        elif fmt == "tsv":
            header = "n\tcount" + ("\tbackend" if extra_columns else "")
            rows = [f"{n}\t{v}" + (f"\t{extra_columns[n]}" if extra_columns else "") for n, v in enumerate(values)]
            self._emit("\n".join([header] + rows))
        else:
            payload = dict(meta)
            payload["counts"] = [str(v) for v in values]
            if extra_columns:
                payload["backends"] = extra_columns
            self._emit(json.dumps(payload, ensure_ascii=False))

    # ------------------------------------------------------------------
    # Kommandos
    # ------------------------------------------------------------------

    def cmd_count(self, pattern_text: Optional[str], N: Optional[int] = None, K: Optional[int] = None,
                  mode: str = "all") -> Tuple[List, int]:
        """
        Zählt p-freie Cayley-Permutationen (bzw. Wörter) für n = 0..N.

        Für Muster aus der Tabelle der Längen zwei und drei wird die Formel
        verwendet und bis cross_check_max_n gegen die Enumeration geprüft.

        Raises:
            CrossCheckError: Formel und Enumeration weichen ab
        """
        N = self.bound('enum_n', N)
        pattern = parse_pattern(pattern_text) if pattern_text else None
        name = pattern_name(pattern) if pattern else "-"

        if mode in ("max", "kary"):
            K = self.bound('max_k', K)
            table = enumeration.count_table(pattern, N, K, mode=mode)
            self._emit_table(table)
            return [[int(c) for c in row] for row in table.counts], EXIT_OK

        if mode == "primitive":
            values = (enumeration.primitive_counts(N) if pattern is None
                      else enumeration.primitive_avoider_counts(pattern, N))
            self._emit_sequence(values, {"pattern": name, "mode": mode}, ["enumeration"] * (N + 1))
            return values, EXIT_OK

        values, backends = self._counts_with_cross_check(pattern, N)
        self._emit_sequence(values, {"pattern": name, "mode": mode}, backends)
        return values, EXIT_OK

    def _counts_with_cross_check(self, pattern, N: int) -> Tuple[List[int], List[str]]:
        entry = catalog.formula_for(pattern) if pattern else None
        limit = self.config['cross_check_max_n']
        values, backends = [], []
        for n in range(N + 1):
            if entry is None:
                values.append(enumeration.count_cayley(n) if pattern is None
                              else enumeration.count_avoiders(pattern, n))
                backends.append("enumeration")
                continue
            formula, label = entry
            value = formula(n)
            if n <= limit:
                enumerated = enumeration.count_avoiders(pattern, n)
                if enumerated != value:
                    raise CrossCheckError(
                        f"Cay({pattern_name(pattern)})[{n}]: Formel {label} liefert {value}, "
                        f"Enumeration liefert {enumerated}"
                    )
                backends.append("formula+enumeration")
            else:
                backends.append("formula")
            values.append(value)
        self.logger.info(f"📊 Cay({pattern_name(pattern) if pattern else '-'}) bis n={N}: {backends[-1]}")
        return values, backends

    def _emit_table(self, table: enumeration.CountTable):
        fmt = self.output_format
        if fmt == "tsv":
            self._emit(table.to_tsv())
        elif fmt == "bfile":
            self._emit(table.to_bfile())
        elif fmt == "json":
            self._emit(json.dumps({
                "pattern": pattern_name(table.pattern) if table.pattern else "-",
                "mode": table.mode,
                "table": [[str(c) for c in row] for row in table.counts],
            }, ensure_ascii=False))
        else:
            self._emit("\n".join(f"{n}: " + " ".join(str(c) for c in row) for n, row in enumerate(table.counts)))

    def cmd_series(self, expression: str, N: Optional[int] = None) -> Tuple[List[int], int]:
        """Wertet einen Spezies-Ausdruck aus und gibt a_0..a_N aus."""
        N = self.bound('series_n', N)
        values = SpeciesExpressionParser(expression).evaluate(N).to_list()
        self.logger.debug(f"🧮 {expression} bis N={N}")
        self._emit_sequence(values, {"expression": expression})
        return values, EXIT_OK

    def cmd_verify(self, names: Optional[List[str]] = None, N: Optional[int] = None,
                   series_N: Optional[int] = None) -> Tuple[List[catalog.IdentityCheck], int]:
        """Führt Identitätschecks aus; Exit 0 genau dann, wenn alle Sätze bestehen."""
        if names:
            checks = [catalog.verify_identity(name, N) for name in names]
        else:
            checks = catalog.verify_all(N, series_N)

        fmt = self.output_format
        if fmt == "json":
            self._emit("\n".join(json.dumps(c.to_dict(), ensure_ascii=False) for c in checks))
        elif fmt == "tsv":
            rows = ["name\tbound\tverdict\tstatus\treference"]
            rows += [f"{c.name}\t{c.bound}\t{c.verdict}\t{c.status}\t{c.reference}" for c in checks]
            self._emit("\n".join(rows))
        else:
            lines = []
            for c in checks:
                line = f"{c.label:<20} {c.name:<22} N={c.bound:<3} {c.reference}"
                if c.requested_bound is not None:
                    line += f" (angefragt N={c.requested_bound})"
                if c.status != catalog.THEOREM:
                    line += f" [{c.status}]"
                if c.mismatch:
                    line += f" :: {c.mismatch['comparison']} bei n={c.mismatch['index']}: " \
                            f"{c.mismatch['left']} ≠ {c.mismatch['right']}"
                lines.append(line)
            self._emit("\n".join(lines))

        failed = [c.name for c in checks if not c.ok]
        if failed:
            self.logger.error(f"❌ Fehlgeschlagene Checks: {', '.join(failed)}")
            return checks, EXIT_FAILURE
        self.logger.info(f"✅ {len(checks)} Checks ohne Fehler")
        return checks, EXIT_OK

    def cmd_equiv(self, patterns: Optional[List[str]], relation: str, length: Optional[int] = None,
                  N: Optional[int] = None, K: Optional[int] = None) -> Tuple[Any, int]:
        """Zwei Muster: Paarvergleich; sonst Klassifikation aller Muster (oder einer Länge)."""
        N = self.bound('equiv_n', N)
        K = self.bound('equiv_k', K)
        parsed = [parse_pattern(p) for p in (patterns or [])]
        if length is not None:
            parsed += equiv.patterns_of_length(length)
        if not parsed:
            raise ConfigError("equiv braucht Muster oder --length")

        if len(parsed) == 2 and length is None:
            report = equiv.test_relation(parsed[0], parsed[1], relation, N, K)
            if self.output_format == "json":
                self._emit(json.dumps(report.to_dict(), ensure_ascii=False))
            else:
                line = f"{pattern_name(report.p)} ~{relation} {pattern_name(report.q)}: {report.verdict}"
                if report.witness:
                    w = report.witness
                    line += f" (n={w['n']}, k={w['k']}, counts {w['counts'][0]} vs {w['counts'][1]})"
                self._emit(line)
            return report, EXIT_OK

        result = equiv.classify(parsed, relation, N, K)
        if self.output_format == "json":
            self._emit(json.dumps(result.to_dict(), ensure_ascii=False))
        else:
            self._emit("\n".join("{" + ", ".join(pattern_name(p) for p in cls) + "}" for cls in result.classes))
        return result, EXIT_OK

    def cmd_bij(self, name: str, input_text: Optional[str] = None, suite_n: Optional[int] = None) -> Tuple[Any, int]:
        """Einzelanwendung einer Bijektion oder, mit suite_n, die erschöpfende Suite."""
        if suite_n is not None:
            report = bijections.bijection_suite(name, suite_n)
            if self.output_format == "json":
                self._emit(json.dumps(report.to_dict(), ensure_ascii=False))
            else:
                status = "OK" if report.ok else f"FAIL: {report.first_failure}"
                self._emit(f"{name} n={suite_n}: {report.checked} geprüft, {status}")
            return report, EXIT_OK if report.ok else EXIT_FAILURE
        if input_text is None:
            raise ConfigError("bij braucht --input oder --suite")
        result = bijections.apply_bijection(name, input_text)
        if self.output_format == "json":
            self._emit(json.dumps({"name": name, "input": input_text, "output": result}, ensure_ascii=False))
        else:
            self._emit(result)
        return result, EXIT_OK

    def cmd_conjecture(self, which: str, max_len: int = 3, N: Optional[int] = None,
                       K: Optional[int] = None, check_consistency: bool = False,
                       verify_candidate: bool = False) -> Tuple[Any, int]:
        """Beschränkte Suche; Vermutungen beeinflussen den Exit-Status nie, Implementierungsfehler schon."""
        if which == "fixpoint":
            check = catalog.verify_identity("fixpoint_conj", N)
            payload = check.to_dict()
            text = f"fixpoint: {check.label}"
            status = EXIT_OK
        else:
            report = equiv.conjecture_scan(which, max_len, self.bound('equiv_n', N), self.bound('equiv_k', K),
                                           check_consistency=check_consistency)
            payload = report.to_dict()
            text = f"{which}: {report.verdict} ({report.pairs_tested} Paare, max_len={max_len})"
            if report.candidate:
                text += f"\n  Kandidat: {report.candidate}"
            if report.note:
                text += f"\n  Hinweis: {report.note}"
            if verify_candidate:
                n, k = self.bound('witness_n'), self.bound('witness_k')
                counts = equiv.known_candidate_counts(n, k)
                payload["candidate_counts"] = {"n": n, "k": k, "counts": {p: str(c) for p, c in counts.items()}}
                text += f"\n  Cay^{k}[{n}]: " + ", ".join(f"{p}: {c}" for p, c in counts.items())
            status = EXIT_FAILURE if report.consistency_violations else EXIT_OK
        self._emit(json.dumps(payload, ensure_ascii=False) if self.output_format == "json" else text)
        return payload, status

    def cmd_table(self, N: Optional[int] = None, confirm: bool = False) -> Tuple[List[Dict], int]:
        """Tabelle für Muster der Längen zwei und drei: Spezies, Reihe, Formel, OEIS und Werte."""
        N = self.bound('enum_n', N)
        rows = []
        for row in catalog.PATTERN_TABLE:
            values = [row.formula(n) for n in range(N + 1)]
            if confirm:
                for p in row.patterns:
                    enumerated = enumeration.avoider_counts(p, N)
                    if enumerated != values:
                        raise CrossCheckError(f"Tabellenzeile {row.enumeration} weicht für {pattern_name(p)} ab")
            rows.append({
                "patterns": [pattern_name(p) for p in row.patterns],
                "species": row.species,
                "series": row.series,
                "enumeration": row.enumeration,
                "oeis": row.oeis,
                "counts": [str(v) for v in values],
            })
        fmt = self.output_format
        if fmt == "json":
            self._emit(json.dumps(rows, ensure_ascii=False))
        elif fmt == "tsv":
            lines = ["patterns\tspecies\tseries\tenumeration\toeis\tcounts"]
            lines += ["\t".join([",".join(r["patterns"]), r["species"], r["series"], r["enumeration"], r["oeis"],
                                 " ".join(r["counts"])]) for r in rows]
            self._emit("\n".join(lines))
        else:
            self._emit("\n".join(f"{', '.join(r['patterns']):<28} {r['species']:<16} {r['oeis']:<8} "
                                 f"{' '.join(r['counts'])}" for r in rows))
        return rows, EXIT_OK


# ---------------------------------------------------------------------------
# Kommandozeile
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default="cayley_config.json", help="JSON-Konfiguration")
    common.add_argument("--format", choices=FORMATS, help="Ausgabeformat (Standard aus der Konfiguration)")
    common.add_argument("--output", help="Ausgabedatei statt Standardausgabe")
    common.add_argument("--workers", type=int, help=f"Worker-Prozesse (vor {WORKERS_ENV} und Konfiguration)")
    common.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    parser = argparse.ArgumentParser(
        prog="cayley_runner.py",
        description="Musterfreie Cayley-Permutationen: Zählen, Spezies-Reihen, Identitäten, Äquivalenzen.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "Reihenausdrücke: + -  <  . ** odot  <  o  <  int, -  <  ' ptg\n"
            "  . ** odot haben gleiche Bindung und dürfen nur mit Klammern gemischt werden.\n"
            f"Exit-Codes: {EXIT_OK} Erfolg, {EXIT_FAILURE} Check fehlgeschlagen/Abweichung, {EXIT_USAGE} Bedienfehler."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", parents=[common], help="p-freie Cayley-Permutationen zählen")
    count.add_argument("--pattern", help="Muster, z.B. 231 oder 1,10,2")
    count.add_argument("--max-n", type=int)
    count.add_argument("--max-k", type=int)
    count.add_argument("--mode", choices=enumeration.MODES, default="all")

    ser = sub.add_parser("series", parents=[common], help="Spezies-Ausdruck auswerten")
    ser.add_argument("expression")
    ser.add_argument("--max-n", type=int)

    verify = sub.add_parser("verify", parents=[common], help="Identitätschecks ausführen")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", action="append")
    group.add_argument("--all", action="store_true")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--series-n", type=int)

    eq = sub.add_parser("equiv", parents=[common], help="Äquivalenz testen oder klassifizieren")
    eq.add_argument("patterns", nargs="*")
    eq.add_argument("--length", type=int)
    eq.add_argument("--relation", choices=equiv.RELATIONS, default="c")
    eq.add_argument("--max-n", type=int)
    eq.add_argument("--max-k", type=int)

    bij = sub.add_parser("bij", parents=[common], help="Bijektion anwenden oder prüfen")
    bij.add_argument("--name", required=True)
    bij.add_argument("--input")
    bij.add_argument("--suite", type=int, metavar="N")

    conj = sub.add_parser("conjecture", parents=[common], help="Beschränkte Suche nach Gegenbeispielen")
    conj.add_argument("--which", required=True, choices=equiv.CONJECTURES + ("fixpoint",))
    conj.add_argument("--max-len", type=int, default=3)
    conj.add_argument("--max-n", type=int)
    conj.add_argument("--max-k", type=int)
    conj.add_argument("--check-consistency", action="store_true")
    conj.add_argument("--verify-candidate", action="store_true",
                      help="Cay^k[n] des Kandidaten 13442/14233 an den witness-Schranken zählen")

    table = sub.add_parser("table", parents=[common], help="Tabelle der Muster der Längen zwei und drei")
    table.add_argument("--max-n", type=int)
    table.add_argument("--confirm", action="store_true", help="Werte per Enumeration bestätigen")
    return parser


def run_command(runner: CayleyRunner, args: argparse.Namespace) -> int:
    if args.command == "count":
        return runner.cmd_count(args.pattern, args.max_n, args.max_k, args.mode)[1]
    if args.command == "series":
        return runner.cmd_series(args.expression, args.max_n)[1]
    if args.command == "verify":
        return runner.cmd_verify(None if args.all else args.name, args.max_n, args.series_n)[1]
    if args.command == "equiv":
        return runner.cmd_equiv(args.patterns, args.relation, args.length, args.max_n, args.max_k)[1]
    if args.command == "bij":
        return runner.cmd_bij(args.name, args.input, args.suite)[1]
    if args.command == "conjecture":
        return runner.cmd_conjecture(args.which, args.max_len, args.max_n, args.max_k, args.check_consistency,
                                      args.verify_candidate)[1]
    return runner.cmd_table(args.max_n, args.confirm)[1]


def main(argv: Optional[List[str]] = None) -> int:
    """Hauptfunktion; liefert den Exit-Code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    overrides = {"output_format": args.format, "log_level": args.log_level, "workers": args.workers}
    try:
        runner = CayleyRunner(args.config, overrides)
    except ConfigError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.output:
        runner.output_path = pathlib.Path(args.output)
        runner.output_path.write_text("", encoding='utf-8')

    try:
        return run_command(runner, args)
    except (ParseError, CayleyError, SeriesError, bijections.BijectionError, catalog.UnknownNameError,
            ConfigError, ValueError) as e:
        runner.logger.error(f"❌ {e}")
        return EXIT_USAGE
    except CrossCheckError as e:
        runner.logger.error(f"❌ Abweichung zwischen Formel und Enumeration: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
