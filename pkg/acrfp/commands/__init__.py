from ._bench_command import BenchCommand
from ._build_db_command import BuildDbCommand
from ._build_index_command import BuildIndexCommand
from ._cmd_arg_parser import CommandArgumentParser
from ._command import Command, ConsoleFactory
from ._config_command import ConfigCommand
from ._degrade_command import DegradeCommand
from ._eval_command import EvalCommand
from ._fingerprint_command import FingerprintCommand
from ._inspect_command import InspectCommand
from ._query_command import QueryCommand
from ._train_pca_command import TrainPcaCommand
from ._version_command import VersionCommand

__all__ = ("Command", "CommandArgumentParser", "ConsoleFactory", "FingerprintCommand",
           "TrainPcaCommand", "BuildDbCommand", "BuildIndexCommand", "DegradeCommand",
           "QueryCommand", "EvalCommand", "BenchCommand", "InspectCommand", "ConfigCommand",
           "VersionCommand",)
