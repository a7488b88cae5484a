import logging
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)


def plot_fertility(report, output_file="fertility.png"):
    """
    Grouped bar chart of fertility per input scheme, one bar per model.
    report is the DataFrame produced by scheme_report.
    """
    output_dir = os.path.dirname(output_file)
    if output_dir and not os.path.exists(output_dir):
        os.makedirs(output_dir)

    schemes = list(dict.fromkeys(report["scheme"]))
    models = list(dict.fromkeys(report["model"]))
    width = 0.8 / max(len(models), 1)

    plt.figure(figsize=(10, 6))
    for i, model in enumerate(models):
        rows = report[report["model"] == model].set_index("scheme")
        values = [float(rows.loc[s, "fertility"]) if s in rows.index else 0.0 for s in schemes]
        positions = [x + i * width for x in range(len(schemes))]
        bars = plt.bar(positions, values, width=width, label=model)
        for bar, value in zip(bars, values):
            plt.text(bar.get_x() + bar.get_width() / 2, value, f"{value:.2f}", ha="center", va="bottom", fontsize=8)

    plt.xticks([x + width * (len(models) - 1) / 2 for x in range(len(schemes))], schemes)
    plt.xlabel("Input")
    plt.ylabel("Fertility (pieces per token)")
    plt.title("Tokeniser fertility")
    plt.legend()
    plt.grid(True, axis="y")

    plt.savefig(output_file)
    plt.close()
    logger.info("Fertility chart saved to %s", output_file)
    return output_file
