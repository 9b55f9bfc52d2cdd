"""Exception types shared by all computation routes.

Two failure modes are kept strictly apart:

* ``ParameterError`` -- the caller asked for something outside the model
  (non-integral point count, unstable (g, n), degree too small, ...).
  The CLI maps this to exit status 2.

* ``InvariantBreach`` -- the inputs were valid but an internal consistency
  check failed (a final value that should be an integer is not, a required
  divisibility fails, a class has support outside its proven degree window).
  This signals a bug, never bad input.  The CLI maps it to exit status 3.
"""


class ParameterError(ValueError):
    """Rejected input: the requested parameters violate a validity condition."""


class InvariantBreach(RuntimeError):
    """Internal consistency check failed on valid input."""
