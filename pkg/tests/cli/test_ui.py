from rspin.cli.ui import CLIInterface, Colors


def test_given_text_when_print_output_called_then_prints_plain_to_stdout(capsys):
    CLIInterface.print_output("D = 0")

    captured = capsys.readouterr()
    assert captured.out == "D = 0\n"
    assert captured.err == ""


def test_given_error_when_print_error_called_then_prints_formatted_to_stderr(capsys):
    error = "Error: something failed"
    CLIInterface.print_error(error)

    captured = capsys.readouterr()
    expected_output = f"{Colors.ERROR}{error}{Colors.RESET}\n"
    assert captured.err == expected_output
