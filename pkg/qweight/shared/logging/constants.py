# Area: Verdict Logging
# PRD: docs/LOGGER_OUTPUT.md
"""Verdict logging constants - display names and color codes."""


class Colors:
    """ANSI color codes for terminal output."""
    GREEN = "\033[92m"
    ORANGE = "\033[93m"
    RED = "\033[91m"
    RESET = "\033[0m"
    BOLD = "\033[1m"


# Status value to color
STATUS_COLORS = {
    "not-excluded": Colors.GREEN,
    "trivial": Colors.ORANGE,
    "excluded": Colors.RED,
}

# Reason value to display name
REASON_DISPLAY_NAMES = {
    "singleton": "SINGLETON",
    "length-bound": "LENGTH-BOUND",
    "shadow": "SHADOW",
    "propagation": "PROPAGATION",
    "purification": "PURIFICATION",
}

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
