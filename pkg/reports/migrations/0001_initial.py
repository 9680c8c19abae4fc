# Generated by Django 4.2.7

from django.db import migrations, models


class Migration(migrations.Migration):
    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="VerificationRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "suite",
                    models.CharField(
                        choices=[
                            ("all", "all"),
                            ("routes", "routes"),
                            ("symmetry", "symmetry"),
                            ("s-lemma", "s-lemma"),
                            ("measure", "measure"),
                            ("functional-eq", "functional-eq"),
                            ("deformed", "deformed"),
                            ("derivatives", "derivatives"),
                            ("z-ode", "z-ode"),
                            ("theorem4", "theorem4"),
                        ],
                        max_length=30,
                        verbose_name="Suíte",
                    ),
                ),
                ("max_order", models.PositiveIntegerField(verbose_name="Ordem máxima")),
                (
                    "mode",
                    models.CharField(
                        choices=[("exact", "exact"), ("modp", "modp"), ("both", "both")],
                        default="exact",
                        max_length=10,
                        verbose_name="Modo",
                    ),
                ),
                ("seed", models.BigIntegerField(verbose_name="Semente")),
                ("passed", models.BooleanField(default=False, verbose_name="Passou")),
                ("cells", models.PositiveIntegerField(default=0, verbose_name="Células")),
                ("failed", models.PositiveIntegerField(default=0, verbose_name="Falhas")),
                (
                    "report",
                    models.JSONField(
                        blank=True,
                        default=dict,
                        help_text="Relatório de verificação em formato JSON",
                        verbose_name="Relatório",
                    ),
                ),
                (
                    "created_at",
                    models.DateTimeField(auto_now_add=True, verbose_name="Criado em"),
                ),
            ],
            options={
                "verbose_name": "Execução de Verificação",
                "verbose_name_plural": "Execuções de Verificação",
                "ordering": ["-created_at"],
            },
        ),
    ]
