"""
Modelos para o app de relatórios.
"""

from django.db import models

from .runner import SUITE_CHOICES as SUITE_NAMES
from .verification import MODES


class VerificationRun(models.Model):
    """
    Execução registrada de uma suíte de verificação (verify --record).
    """

    SUITE_CHOICES = [(name, name) for name in SUITE_NAMES]
    MODE_CHOICES = [(mode, mode) for mode in MODES]

    suite = models.CharField(
        'Suíte',
        max_length=30,
        choices=SUITE_CHOICES
    )

    max_order = models.PositiveIntegerField('Ordem máxima')

    mode = models.CharField(
        'Modo',
        max_length=10,
        choices=MODE_CHOICES,
        default='exact'
    )

    seed = models.BigIntegerField('Semente')

    passed = models.BooleanField('Passou', default=False)

    cells = models.PositiveIntegerField('Células', default=0)

    failed = models.PositiveIntegerField('Falhas', default=0)

    report = models.JSONField(
        'Relatório',
        default=dict,
        blank=True,
        help_text='Relatório de verificação em formato JSON'
    )

    created_at = models.DateTimeField(
        'Criado em',
        auto_now_add=True
    )

    class Meta:
        verbose_name = 'Execução de Verificação'
        verbose_name_plural = 'Execuções de Verificação'
        ordering = ['-created_at']

    def __str__(self):
        status = 'ok' if self.passed else 'falhou'
        return f"{self.suite} N={self.max_order} {self.mode} ({status})"

    @classmethod
    def record(cls, report, config, suite):
        """Guarda o relatório de uma execução."""
        summary = report.summary()
        return cls.objects.create(
            suite=suite,
            max_order=config.max_order,
            mode=config.mode,
            seed=config.seed,
            passed=report.passed,
            cells=summary['cells'],
            failed=summary['failed'],
            report=report.to_dict(header=config.header(suite)),
        )
