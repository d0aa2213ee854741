"""Console output used by all thetaring objects.

Everything is printed to stdout. The CLI silences the module when a JSON
report is written to stdout so that the output stays parseable.
"""
_silent = False

def silence(silent: bool=True) -> None:
    global _silent
    _silent = silent

def is_silent() -> bool:
    return _silent

def _print(text: str='') -> None:
    if not _silent:
        print(text)

def print_line(marker='-', length=75):
    """Use to print a line '-----...-----'"""

    _print(marker * length)

def to_file(filename):
    plain(f"Writing to file >>> {filename}")

def plain(msg):
    _print(msg)

def info(msg):
    _print(f"*** {msg} ***")

def advice(msg):
    _print(f"!!! {msg} !!!")

def warning(msg, length=90):
    blank()
    print_line('!', length)
    advice(msg)
    print_line('!', length)
    blank()

def header(obj, msg):
    """Use with objects that are an instance of an abstract class."""

    blank()
    print_line()
    plain(f"{type(obj).__name__} ({obj.__class__.__bases__[0].__name__}): {msg}")
    print_line()

def blank():
    _print('')

def process(msg):
    _print(f">>> {msg} <<<")

def verdict(name: str, status: str, seconds: float):
    marker = {'pass': '   ok', 'fail': ' FAIL', 'skipped': ' skip'}.get(status, status)
    plain(f"[{marker}] {name} ({seconds:.3f} s)")

def templates(code):
    if code == 'even_prime':
        info("The assembled contradiction is only stated for odd primes")
        advice("Use p2_quartic_search(N) for p = 2")
    elif code == 'cap':
        info("Symbolic size cap reached")
        advice("Raise the cap with --monomial-cap or lower --summands")
