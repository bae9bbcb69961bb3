from hdastar.parallel.engine import RunReport, hda_solve
from hdastar.parallel.mailbox import Mailbox

__all__ = ["Mailbox", "RunReport", "hda_solve"]
