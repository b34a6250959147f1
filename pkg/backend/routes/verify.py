"""
Verification routes
Submits suites to the background scheduler and reports job status
"""
import os

from flask import Blueprint, request, jsonify

from utils.errors import LatticeSymError, MalformedInputError
from utils.logger import logger
from utils.serialization import require_field
from workers.verify_worker import job_store, submit_verify_job

bp = Blueprint('verify', __name__)


def _optional_int(data, key: str, default=None):
    value = data.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInputError(f'{key} must be an integer', {key: value})
    return value


@bp.route('/verify', methods=['POST'])
def submit_verify():
    """
    Queue a verification suite
    Body: {suite, max_n?, jobs?, long?}
    Returns 202 with the job id; LATTICESYM_VERIFY_INLINE=true runs it before responding
    """
    try:
        data = request.get_json(force=True, silent=True) or {}
        suite = require_field(data, 'suite')
        max_n = _optional_int(data, 'max_n')
        jobs = _optional_int(data, 'jobs', 1)
        long = bool(data.get('long', False))
        inline = os.getenv('LATTICESYM_VERIFY_INLINE', 'false').lower() == 'true'

        job_id = submit_verify_job(suite, max_n, jobs=jobs, long=long, run_inline=inline)
        job = job_store.get(job_id)
        logger.info(f"📊 Verify job {job_id} submitted", suite=suite, job_id=job_id)

        return jsonify({
            'ok': True,
            'data': {'job_id': job_id, 'status': job['status'], 'suite': suite, 'max_n': job['max_n']}
        }), 202

    except LatticeSymError as e:
        return jsonify({'ok': False, 'error': e.to_dict()}), 400


@bp.route('/verify/<job_id>', methods=['GET'])
def get_verify(job_id):
    """Status and report of a verification job"""
    job = job_store.get(job_id)
    if not job:
        return jsonify({
            'ok': False,
            'error': {
                'code': 'JOB_NOT_FOUND',
                'message': f'Verification job {job_id} not found',
                'details': {}
            }
        }), 404

    return jsonify({'ok': True, 'data': job}), 200
