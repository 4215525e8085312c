# Drawing curves, parallels and evolutes
#
# Writes two SVG files into the current directory: the limacon with two
# parallels, and the ellipse with its evolute (dashed) and a parallel whose
# singular points are circled.

from parcurve import svg
from parcurve.cli import CurveSpec, build_plot

plot = build_plot(CurveSpec("limacon", {"a": 2, "b": 1}), offsets=[0.1, 0.25])
svg.write(plot, "limacon_parallels.svg")

plot = build_plot(CurveSpec("ellipse", {"a": 2, "b": 1}), evolute=True, offsets=[0.6])
svg.write(plot, "ellipse_evolute.svg")
print([len(layer.markers) for layer in plot.layers])

# The same figures come from the command line:
#
#   parcurve plot --curve limacon --offset 0.1 --offset 0.25 --out limacon_parallels.svg
#   parcurve plot --curve ellipse --evolute --offset 0.6 --out ellipse_evolute.svg
