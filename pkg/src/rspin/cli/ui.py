import sys


class Colors:
    ERROR = "\033[91m"
    RESET = "\033[0m"


class CLIInterface:
    """Handles CLI output: results on stdout, everything else on stderr."""

    @staticmethod
    def print_output(text: str):
        print(text)

    @staticmethod
    def print_error(message: str):
        print(f"{Colors.ERROR}{message}{Colors.RESET}", file=sys.stderr)
