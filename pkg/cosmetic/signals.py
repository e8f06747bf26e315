import django.dispatch


# Sent by the collector of a scan, never by its workers, so receivers see
# reports in the final sorted order.
scan_started = django.dispatch.Signal()  # name, bounds
candidate_found = django.dispatch.Signal()  # report
scan_finished = django.dispatch.Signal()  # name, count
